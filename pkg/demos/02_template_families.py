"""
Template families and avoidance certificates
============================================

A template (order, slots) describes how a permutation splits into
consecutive subwords with stacked value blocks; '0' slots hold exactly one
element, '1' slots recurse into the family. Families grow fast, avoid
interesting patterns, and a finite check certifies avoidance for every
length at once.
"""
from patavoid import (
    certify_avoidance,
    count_avoiders,
    generate_family,
    parse_template,
    three_segment_counts,
)

# the stacked shape behind 132-avoidance: everything left of the maximum
# sits above everything right of it
stack = parse_template("231:101")
for n in range(5):
    print(f"family(231:101, {n}) = {sorted(generate_family([stack], n))}")
print("sizes n = 0..10:", [len(generate_family([stack], n)) for n in range(11)])
print("(the Catalan numbers: this family is exactly the 132-avoiders)\n")

# certificates: if the family realizes a length-l pattern at any length, it
# already does so by length (l-1)(k+1)+1, k = zeros in the slot string, so
# checking that far proves avoidance everywhere
cert = certify_avoidance([stack], [(1, 3, 2)])
print(f"231:101 avoids 132 at every length? {cert.verified} (checked to {cert.bound})")

# a five-slot shape whose family sits inside Av(2143, 2413, 3142)
five = parse_template("45312:10101")
cert = certify_avoidance([five], [(2, 1, 4, 3), (2, 4, 1, 3), (3, 1, 4, 2)])
print(f"45312:10101 avoids {{2143, 2413, 3142}}? {cert.verified} (checked to {cert.bound})")

# its sizes satisfy a three-segment recurrence, giving a certified lower
# bound on the class sizes
rec = three_segment_counts(9)
clazz = count_avoiders([(2, 1, 4, 3), (2, 4, 1, 3), (3, 1, 4, 2)], 9)
print("\n n      family  class")
for n in range(10):
    print(f"{n:2d} {rec.counts[n]:10d} {clazz.counts[n]:6d}")

# two templates together: their union family lower-bounds a 4-pattern class
pair = [parse_template("14253:10101"), parse_template("15243:10101")]
cert = certify_avoidance(pair, [(2, 3, 4, 1), (2, 4, 1, 3), (2, 4, 3, 1), (3, 2, 4, 1)])
print(f"\npair family avoids {{2341, 2413, 2431, 3241}}? {cert.verified}")
doubled = three_segment_counts(9, variants=2)
print("pair family sizes:", doubled.counts)

# a template that fails immediately, with the witness
bad = certify_avoidance([parse_template("12:11")], [(1, 2)])
print(f"\n12:11 avoids 12? {bad.verified}; witness: {bad.witness}")
