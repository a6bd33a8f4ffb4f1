# PD vertex cover as 2SAT, and 2SAT on its own.
from choreorient import make_instance
from choreorient.pdcover import PdInstance, build_formula, find_cover, verify_cover
from choreorient.twosat import from_dimacs, solve

# path 0-1-2-3; at most one of {1, 2}; vertex 3 forbidden
path = make_instance(4, [(0, 1, 0, 0), (1, 2, 0, 0), (2, 3, 0, 0)])
pd = PdInstance(path, groups_p=(frozenset({1, 2}),), forbidden_d=frozenset({3}))
f = build_formula(pd)
print(len(f), "clauses")
cover = find_cover(pd)
print("cover:", sorted(cover), verify_cover(pd, cover))

# (x1 or x2) and (not x1 or x2) and (not x2 or x3)
print(solve(from_dimacs("p cnf 3 3\n1 2 0\n-1 2 0\n-2 3 0\n")))
# x1 and not x1
print(solve(from_dimacs("1 0\n-1 0\n")))
