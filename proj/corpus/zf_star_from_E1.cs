#! name: zf_star_from_E1
#! layer: fol
#! mode: classical
#! anchor: (E1) route to (*)

# The self-instance of extensionality (z := x) is admitted once the tacit
# distinctness convention is set aside; under the convention the same plan
# is rejected (see the unit tests). The quantifier-free reading of the
# instance is reconstructed by an explicit forall elimination inside the
# biconditional.

step e1:   axiom E1 with x := x; y := y; z := x conv free
step e2:   rewrite [e1] forall_elim @ 1 with t := x
step e3:   rewrite [e2] iff_comm @ 1  {anchor: (E1) instance}
step e4:   iff_rl [e3]
step e5:   rewrite [e4] contrapose @ root
step star: rewrite [e5] neg_iff_shift @ 1  {anchor: (*)}
