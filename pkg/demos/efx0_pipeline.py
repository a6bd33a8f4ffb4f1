# EFX0 from start to finish: subdivide, plan, cover, orient, lift back.
from choreorient import check_efx0, figure1_instance, make_instance, negative_components, subdivide
from choreorient.efx import plan_objective, solve as solve_efx0

fig = figure1_instance()
for comp in negative_components(fig).components:
    print("component", sorted(comp.vertices), "negative edges", comp.negative_edges)

plan = plan_objective(fig)
print("P groups:", [sorted(g) for g in plan.pd.groups_p])
print("D:", sorted(plan.pd.forbidden_d))
print("cover:", plan.cover)  # None: a dummy edge sits inside D
print("EFX0 orientation:", solve_efx0(fig))

# an edge that costs only one endpoint gets a fake midpoint
inst = make_instance(3, [(0, 1, 0, -2), (1, 2, -1, -1), (0, 2, 0, 0)])
sub = subdivide(inst)
print("objective copy has", sub.objective_instance.vertex_count, "vertices,",
      sub.objective_instance.edge_count, "edges")
o = solve_efx0(inst)
print("lifted:", o.receiver, "EFX0:", check_efx0(inst, o))
