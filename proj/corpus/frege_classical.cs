#! name: frege_classical
#! layer: frege
#! mode: classical
#! anchor: (82), (77), substitutions i)-iii), (theta), (iota), (kappa), (lambda)

# The appendix derivation, replayed literally: substitutions i)-iii) in
# propositions (82) and (77) produce (theta) and (kappa); (Ig) gives
# (iota); (kappa) and (iota) give (lambda), which contradicts (iota).
# The consistency report must flag exactly that pair.

subst i:   f(%) := not (% mem %)
subst ii:  F(%) := horiz %
subst iii: a := ext e. not (e mem e)

step p82:    axiom 82  {anchor: (82)}
step t1:     subst_fun [p82] via i
step t2:     subst_fun [t1] via ii
step theta:  inst [t2] via iii  {anchor: (theta)}
step iota:   ig [theta]  {anchor: (iota)}
step p77:    axiom 77  {anchor: (77)}
step k1:     subst_fun [p77] via i
step k2:     subst_fun [k1] via ii
step kappa:  inst [k2] via iii  {anchor: (kappa)}
step lambda: mp [kappa iota]  {anchor: (lambda)}
