# Exhaustive search: every orientation, scored with numpy.
import numpy as np

from choreorient import gen_random, RandomParams
from choreorient.oracle import count_orientations, enumerate_orientations, orientation_verdicts

inst = gen_random(RandomParams(6, 9, self_loop_fraction=0.2), seed=16)
ef1 = orientation_verdicts(inst, "ef1")
efx = orientation_verdicts(inst, "efx0")
print(len(ef1), "orientations;", ef1.sum(), "EF1,", efx.sum(), "EFX0")
print("EFX0 but not EF1:", np.count_nonzero(efx & ~ef1))
print("first EFX0:", enumerate_orientations(inst, "efx0"))
print("EF1 count:", count_orientations(inst, "ef1"))
