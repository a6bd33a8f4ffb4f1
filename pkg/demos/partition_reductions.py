# Partition as a fair-orientation question on tiny multigraphs.
from choreorient import gen_three_vertex, gen_two_vertex, has_equipartition
from choreorient.oracle import enumerate_orientations

for values in ([1, 2, 3], [2, 2, 3], [3, 1, 1, 2, 2, 1]):
    print(values, "splits evenly:", has_equipartition(values))
    print("  two vertices, EF1: ", enumerate_orientations(gen_two_vertex(values, "ef1"), "ef1") is not None)
    print("  two vertices, EFX0:", enumerate_orientations(gen_two_vertex(values, "efx0"), "efx0") is not None)
    print("  three vertices, EF1:", enumerate_orientations(gen_three_vertex(values), "ef1") is not None)
