# Dev scratch 2: enumeration-set hypotheses + w=8 three-product error sign.
from fractions import Fraction

from logmul import MultiplierConfig, multiply

def sweep(model, width, variant="four-product"):
    cfg = MultiplierConfig(model=model, width=width, variant=variant)
    rows = []
    hi = 1 << width
    for a in range(1, hi):
        for b in range(1, hi):
            t = a * b
            e = multiply(a, b, cfg)
            rows.append((a, b, t, e))
    return rows

for model, target in (("mitchell", 5.5185), ("mitchell-kom", 1.7629)):
    rows = sweep(model, 4)
    n = len(rows)
    rel = [Fraction(t - e, t) for (_, _, t, e) in rows]
    abs_err = [t - e for (_, _, t, e) in rows]
    mean_rel = float(sum(rel) / n) * 100
    nz = [r for r in rel if r != 0]
    print(f"{model}: target={target}")
    print(f"  mean rel (225)           = {mean_rel:.4f}")
    print(f"  mean rel over err!=0     = {float(sum(nz)/len(nz))*100:.4f}  (n={len(nz)})")
    print(f"  sum_abs/225/225*100      = {sum(abs_err)/225/225*100:.4f}")
    print(f"  mean_abs/mean_true*100   = {sum(abs_err)/sum(t for *_ , t, _ in rows)*100:.4f}")

# distinct true products for 4-bit operands (Fig-12 'unique combinations' guess)
prods = {a * b for a in range(1, 16) for b in range(1, 16)}
print("distinct nonzero products 4-bit:", len(prods))
prods0 = {a * b for a in range(16) for b in range(16)}
print("distinct products incl zero:", len(prods0))

# unique unordered pairs with distinct operands?
print("unordered nonzero pairs:", len({tuple(sorted((a, b))) for a in range(1, 16) for b in range(1, 16)}))

# w=8 mitchell-kom: any overestimates (negative error)? both variants; also w=8 variant mismatch count
for variant in ("four-product", "three-product"):
    cfg = MultiplierConfig(model="mitchell-kom", width=8, variant=variant)
    neg = 0
    worst = Fraction(0)
    first_neg = None
    for a in range(1, 256):
        for b in range(1, 256):
            t = a * b
            e = multiply(a, b, cfg)
            er = Fraction(t - e, t)
            if er < 0:
                neg += 1
                if first_neg is None:
                    first_neg = (a, b, t, e)
            if er > worst:
                worst = er
    print(f"w=8 mitchell-kom {variant}: neg={neg} first={first_neg} mer={float(worst)*100:.4f}")
