#! name: zf_doublestar
#! layer: fol
#! mode: classical
#! anchor: RA setup, (*) and (**)

# The Russell comprehension instance, a witness a for it, and (**): the
# member condition forces distinctness from a, so the step "for x = y" in
# RA is never available.

step c:     axiom C with phi(%) := ~(% in %)  {anchor: RA comprehension instance}
step w:     witness [c] as a
step I:     axiom E2 with x := x; y := y; phi := x in x occ {2}  {anchor: (I)}
step IIa:   rewrite [I] contrapose @ root
step II:    rewrite [IIa] iff_comm @ 1.1  {anchor: (II)}
step star:  rewrite [II] neg_iff_shift @ 1  {anchor: (*)}
step dstar: inst [star] with y := a  {anchor: (**)}
