#! name: zf_star_from_E2
#! layer: fol
#! mode: classical
#! anchor: (I)-(III) from (E2), yielding (*)

# Substitutivity route: (I) instantiates (E2) with phi(x,x) := x in x,
# replacing the second occurrence; contraposition and biconditional
# commutation give (II); the negation shift gives (III), i.e. (*).

step I:    axiom E2 with x := x; y := y; phi := x in x occ {2}  {anchor: (I)}
step IIa:  rewrite [I] contrapose @ root
step II:   rewrite [IIa] iff_comm @ 1.1  {anchor: (II)}
step III:  rewrite [II] neg_iff_shift @ 1  {anchor: (III) = (*)}
