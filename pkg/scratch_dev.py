# Dev scratch: verify derived numeric facts before freezing into tests.
from fractions import Fraction

from logmul import MultiplierConfig, multiply

def stats(model, width, variant="four-product", unordered=False):
    cfg = MultiplierConfig(model=model, width=width, variant=variant)
    ers = []
    neg = 0
    zero = 0
    lo = 1
    hi = 1 << width
    for a in range(lo, hi):
        brange = range(a, hi) if unordered else range(lo, hi)
        for b in brange:
            t = a * b
            e = multiply(a, b, cfg)
            er = Fraction(t - e, t)
            ers.append(er)
            if er < 0:
                neg += 1
            if er == 0:
                zero += 1
    n = len(ers)
    aer = float(sum(ers) / n) * 100
    mer = float(max(ers)) * 100
    mn = float(min(ers)) * 100
    return dict(n=n, aer=aer, mer=mer, min=mn, neg=neg, zero=zero, zfrac=zero / n)

print("w=4 mitchell flat ordered-nonzero:", stats("mitchell", 4))
print("w=4 mitchell flat unordered-nonzero:", stats("mitchell", 4, unordered=True))
print("w=4 mitchell-kom four:", stats("mitchell-kom", 4))
print("w=4 mitchell-kom three:", stats("mitchell-kom", 4, variant="three-product"))
print("w=4 refmlm four:", stats("refmlm", 4))
print("w=4 refmlm three:", stats("refmlm", 4, variant="three-product"))

# the w=8 three-product overestimate candidate
cfg = MultiplierConfig(model="mitchell-kom", width=8, variant="three-product")
print("71*30 three-product mitchell-kom:", multiply(71, 30, cfg), "true:", 71 * 30)

# w=2 mitchell truth check vs the 16-row table
from logmul import mitchell_multiply, efmlm2_multiply
for a in range(4):
    for b in range(4):
        mp = mitchell_multiply(a, b, 2)
        print(f"{a}x{b}: mlm={mp.value} efmlm={efmlm2_multiply(a,b)} true={a*b} carry={mp.carry_case}")
