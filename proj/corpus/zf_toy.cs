#! name: zf_toy
#! layer: fol
#! mode: classical
#! anchor: toy base theory for the definition checker

# Extensionality plus the existence of a memberless set. Finitely
# satisfiable, so the conservativity enumeration has base models at every
# size; extensionality makes the memberless set unique.

postulate ext: all x. all y. ((all z. (z in x <-> z in y)) <-> x = y)
postulate empty_exists: exists y. all x. ~(x in y)
