#! name: defs_collapse
#! layer: fol
#! anchor: dropped uniqueness; creative

# psi holds of every y, so the definitional axiom collapses the carrier
# to a single element: a creative extension.

define C0 rank 0 vars y: y = y
