#! name: defs_emptyset
#! layer: fol
#! anchor: the memberless-set definition

define EMPTY rank 0 vars y: all x. (x in y <-> ~(x = x))
