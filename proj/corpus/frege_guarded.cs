#! name: frege_guarded
#! layer: frege
#! mode: guarded
#! anchor: (1)-(5), guard at substitution iii), (6)-(12), blocked self-instantiation

# The guarded replay. (2) is derived from (IIIb) and (IIIe) via the
# g(xi) := ((not g(a)) = g(xi)) trick; substitution i) in law (1) gives
# (3); iv) and v) in (2) give (4); modus ponens on (4) with (3) gives (5).
# Once (5) is registered, the replacement of the value-range for a - and
# with it substitution iii) in (82) - is blocked. The value-range of the
# identity-based member condition (V, the class of classes not belonging
# to themselves) then yields (6)-(12) without V'b or V'c, ending in
# (10) and (12): V is not identical to itself, nor to its own definiens.

def V := ext w. not (allF g. ((ext u. g(u)) = w -> g(w)))

subst i:    f(%) := not (% mem %)
subst iv:   g(%) := a mem %
subst v:    b := ext e. not (e mem e)
subst vi:   f(%) := allF g. ((ext u. g(u)) = % -> g(%))
subst vii:  g(%) := allF g. ((ext u. g(u)) = % -> g(%))

# (2) from (IIIb) and (IIIe)
step b1:   axiom IIIb with g(%) := ((not g(a)) = g(%))  {anchor: (IIIb) instance}
step b2:   rewrite [b1] cancel_neg_id @ 1
step b3:   axiom IIIe  {anchor: (IIIe)}
step b4:   inst [b3] with a := g(a)
step two:  mp [b2 b4]  {anchor: (2)}

# (3), (4), (5)
step one:   axiom 1  {anchor: (1)}
step three: subst_fun [one] via i  {anchor: (3)}
step f1:    subst_fun [two] via iv
step four:  inst [f1] via v  {anchor: (4)}
step five:  mp [four three]  {anchor: (5)}
step g5:    guard [five]

# the replacement of the value-range for a in (3) is now invalid
step x1:   inst [three] with a := ext e. not (e mem e)  {expect: blocked, cite: five}

# and with it substitution iii) in (82)
step p82:  axiom 82  {anchor: (82)}
step q1:   subst_fun [p82] via i
step q2:   subst_fun [q1] with F(%) := horiz %
step x2:   inst [q2] with a := ext e. not (e mem e)  {expect: blocked, cite: five, anchor: substitution iii)}

# (6)-(10): the V'c-free route
step v0:    axiom V with g(%) := not (allF g. ((ext u. g(u)) = % -> g(%))); f(%) := horiz f(%)  {anchor: (V) instance}
step six:   gothic [v0] with t := V  {anchor: (6)}
step seven: coref [six] V  {anchor: (7)}
step eight: subst_fun [seven] via vi  {anchor: (8)}
step n1:    subst_fun [two] via vii
step nine:  inst [n1] with a := V; b := V  {anchor: (9)}
step t10a:  id_subst [nine eight] @ 1
step t10b:  fold [t10a] V @ 1.1
step ten:   ig [t10b]  {anchor: (10)}

# (11), (12): the same by a different substitution
step e0:     gothic [v0] with t := ext w. not (allF g. ((ext u. g(u)) = w -> g(w)))
step e1f:    fold [e0] V @ 2.1.2.1.1.1
step eleven: coref [e1f] V  {anchor: (11)}
step w2:     subst_fun [eleven] via vi
step n3:     inst [n1] with a := ext w. not (allF g. ((ext u. g(u)) = w -> g(w))); b := V
step t12a:   id_subst [n3 w2] @ 1
step t12b:   ig [t12a]
step twelve: rewrite [t12b] symm @ 1  {anchor: (12)}

# with (10) and (12) registered, the self-instantiation is blocked
step g10: guard [ten]
step g12: guard [twelve]
step x3:  inst [b3] with a := V  {expect: blocked, cite: ten, anchor: self-instantiation}
