"""Tour of the four scalar carriers.

Each semifield swaps one pair of choices: the idempotent addition keeps
the larger or the smaller carrier value, and the group operation is
carrier + or carrier *.  Everything else (zero, one, inverses, rational
powers, the order) follows from those two choices.
"""

from fractions import Fraction

from tropsolve import MAX_PLUS, MAX_TIMES, MIN_PLUS, MIN_TIMES

for sf in (MAX_PLUS, MIN_PLUS, MAX_TIMES, MIN_TIMES):
    two, three = sf.scalar(2), sf.scalar(3)
    print(f"--- {sf.tag}")
    print(f"  2 (+) 3      = {(two + three).literal()}")
    print(f"  2 (*) 3      = {(two * three).literal()}")
    print(f"  inverse(3)   = {three.inv().literal()}")
    print(f"  zero, one    = {sf.zero.literal()}, {sf.one.literal()}")
    print(f"  zero <= 2    : {sf.zero <= two}   (zero is always least)")

# the additive carriers compute in exact rationals, so roots are exact
print("\nexact rational powers on the max-plus carrier:")
x = MAX_PLUS.scalar(9)
for e in (Fraction(1, 2), Fraction(1, 3), Fraction(-2, 3)):
    print(f"  9 ** {e}  ->  {(x ** e).literal()}")

# the order is the one induced by idempotent addition: a <= b iff a+b == b
a, b = MIN_PLUS.scalar(1), MIN_PLUS.scalar(2)
print("\nmin-plus order is reversed relative to the number line:")
print(f"  1 <= 2 in min-plus? {a <= b}")
print(f"  2 <= 1 in min-plus? {b <= a}")

# splitting a joined bound works in any of the four carriers
z = MAX_PLUS.scalar(5)
print("\n(x + y) <= z is the same as x <= z and y <= z:")
x, y = MAX_PLUS.scalar(3), MAX_PLUS.scalar(4)
print(f"  x+y <= z: {x + y <= z},  x <= z and y <= z: {x <= z and y <= z}")
