#! name: frege_wayout_Vc
#! layer: frege
#! mode: classical
#! anchor: (V'b)/(V'c) way-out comparison

# The amended axioms of the appendix, applied to the same member condition.
# The V'c instance carries the subcomponent not (V = V) once V is folded
# back in, so the old contradiction cannot be reproduced from it; the main
# corpus derives that subcomponent from (V) and (III) alone, with no V'b
# or V'c.

def V := ext w. not (allF g. ((ext u. g(u)) = w -> g(w)))

step c1: axiom Vpc with f(%) := horiz f(%); g(%) := not (allF g. ((ext u. g(u)) = % -> g(%))); a := V  {anchor: (V'c) instance}
step c2: fold [c1] V @ 2.1.1.2  {anchor: abbreviated form}
step b1: axiom Vpb with f(%) := horiz f(%); g(%) := not (allF g. ((ext u. g(u)) = % -> g(%))); a := V  {anchor: (V'b) instance}
