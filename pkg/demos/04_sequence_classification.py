"""
Classifying counting sequences
==============================

Counting sequences of heavily constrained avoidance classes tend to be
eventually zero, eventually polynomial, or occasionally something like a
Fibonacci recurrence with a linear drift. The classifier works in exact
arithmetic; sequences are indexed from 0 at their first term.
"""
from patavoid import classify, count_avoiders, detect_eventual_polynomial, detect_fib_like

# a polynomial class: constant fourth differences from the start
counts = count_avoiders([(1, 2, 3, 4), (1, 2, 4, 3), (3, 2, 4, 1), (3, 4, 1, 2)], 10)
row = list(counts.counts[1:])
print("counts n = 1..10:", row)
fit = detect_eventual_polynomial(row, 7)
print(f"degree {fit.degree} from index {fit.threshold}; coefficients {fit.coefficients}")

# the classifier's precedence: a zero tail wins over the constant fit
print("\n1,2,2,0,0,0,0      ->", classify([1, 2, 2, 0, 0, 0, 0]).verdict)
print("1,2,4,6,8,10,12,14 ->", classify([1, 2, 4, 6, 8, 10, 12, 14]).verdict, "degree",
      classify([1, 2, 4, 6, 8, 10, 12, 14]).degree)

# a sequence from a 12-pattern experiment that is not polynomial at all:
# its tail obeys f(n) = f(n-1) + f(n-2) - 5
seq = [1, 2, 6, 12, 18, 26, 39, 60, 94, 149, 238, 382, 615]
fib = detect_fib_like(seq)
print(f"\n{seq}")
print(f"drift recurrence: f(n) = f(n-1) + f(n-2) + {fib.a}*n + {fib.b} for n >= {fib.threshold}")
report = classify(seq)
print("classify:", report.to_json_dict())

# exact rational interpolation recovers polynomials perfectly
poly = [p * p * p - 7 * p + 3 for p in range(1, 12)]
fit = detect_eventual_polynomial(poly, 7)
print("\ncubic sample:", poly)
print("recovered coefficients (in the 0-based index k, term k = p(k+1)):", fit.coefficients)
