#! name: defs_russell
#! layer: fol
#! anchor: the Russell-set definition, rejected at restriction (iv)

define R rank 0 vars y: all x. (x in y <-> ~(x in x))
