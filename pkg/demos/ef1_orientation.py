# EF1 orientations: a vertex may receive at most one edge it dislikes.
from choreorient import check_ef1, make_instance, solve_ef1

# a 4-cycle of chores with one free edge
inst = make_instance(4, [(0, 1, -2, -2), (1, 2, -1, -3), (2, 3, -1, -1), (3, 0, 0, 0)])
o = solve_ef1(inst)
print("receivers:", o.receiver)
print("EF1:", check_ef1(inst, o))

# a triangle plus a pendant chore: 4 costly edges on 4 vertices still fits
inst = make_instance(4, [(0, 1, -1, -1), (1, 2, -1, -1), (2, 0, -1, -1), (2, 3, -1, -1)])
print("triangle + pendant:", solve_ef1(inst).receiver)

# two triangles sharing a vertex: 6 costly edges on 5 vertices cannot fit
inst = make_instance(5, [(0, 1, -1, -1), (1, 2, -1, -1), (2, 0, -1, -1),
                         (2, 3, -1, -1), (3, 4, -1, -1), (4, 2, -1, -1)])
print("bowtie:", solve_ef1(inst))
