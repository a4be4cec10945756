# coding: utf-8

# # Getting data in
#
# Ratings become signs through a threshold rule, unsigned edges get seeded
# random signs, and everything can be written to one canonical text format.

import io
from fractions import Fraction

from signed_biclique import (
    EPINIONS,
    JESTER,
    IdMap,
    assign_random_signs,
    binarize_ratings,
    read_canonical,
    write_canonical,
)

# ## Star ratings
#
# 4 or more stars is positive.  Ids are arbitrary strings, so ask for a
# remap and keep the table.

ratings = """\
# user item stars
ann  lamp  5
ann  desk  2
bob  lamp  4
bob  sofa  3.5
cat  desk  4
"""
ids = IdMap()
g = binarize_ratings(ratings, EPINIONS, id_map=ids)
print(write_canonical(g))
buf = io.StringIO()
ids.write(buf)
print(buf.getvalue())

# Joke ratings run from -10 to 10 and only strictly above 6 counts.

print([JESTER.sign(Fraction(x)).name for x in ("6", "6.5", "-2")])

# ## Random signs for unsigned edges
#
# The draw for edge i is word i of a Philox stream keyed by the seed, so
# the result depends only on edge order and seed.

edges = [(u, v) for u in range(100) for v in range(100)]
a = assign_random_signs(edges, Fraction(7, 10), seed=1)
b = assign_random_signs(edges, Fraction(7, 10), seed=1)
pos = sum(s.name == "POSITIVE" for *_, s in a.edges())
print("positive fraction:", pos / len(edges), "same bytes:", write_canonical(a) == write_canonical(b))

# ## Round trip

assert read_canonical(write_canonical(a)) == a
print("round trip ok")
