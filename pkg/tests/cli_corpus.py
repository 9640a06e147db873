"""Fixed CLI corpus: ten input quadrics and the invocations run against them."""

import io
from pathlib import Path

from quadrilab.cli.main import run

GOLDEN_DIR = Path(__file__).parent / "golden"

INPUTS = {
    "sphere": "x^2 + y^2 + z^2 = 1",
    "ellipsoid": "x^2/9 + y^2/4 + z^2 = 1",
    "hyp1": "x^2 + y^2 - z^2 = 1",
    "hyp2": "z^2 - x^2 - y^2 = 1",
    "cone": "x^2 + y^2 - z^2",
    "paraboloid": "x^2 + y^2 - z",
    "saddle": "x^2 - y^2 - z",
    "pcyl": "x^2 + 2*x*y + y^2 + z - 1",
    "tilted": "2x^2 + 3y^2 + 4z^2 + 2x y - 2y z + x - 5 = 0",
    "planes": "x^2 - y^2",
}

CASES = []
for _name, _expr in INPUTS.items():
    CASES.append((f"classify_{_name}", ["classify", _expr]))
    CASES.append((f"reduce_{_name}", ["reduce", _expr, "--format", "json"]))
    CASES.append((f"center_{_name}", ["center", _expr]))

I = INPUTS
CASES += [
    ("section_ellipsoid", ["section", I["ellipsoid"], "--plane=0,0,1,0"]),
    ("section_paraboloid_oblique", ["section", I["paraboloid"], "--plane=-1,0,1,1", "--format", "json"]),
    ("section_hyp1_lines", ["section", I["hyp1"], "--plane=1,0,0,1"]),
    ("parallel_ellipsoid", ["parallel-sections", I["ellipsoid"], "--normal=1,1,1"]),
    ("parallel_tilted", ["parallel-sections", I["tilted"], "--normal=0,0,1", "--offsets=-0.3,0,0.4"]),
    ("circular_ellipsoid", ["circular", I["ellipsoid"]]),
    ("circular_hyp1", ["circular", I["hyp1"], "--format", "json"]),
    ("circular_sphere", ["circular", I["sphere"]]),
    ("rulings_hyp1", ["rulings", I["hyp1"], "--point=1,0,0"]),
    ("rulings_saddle", ["rulings", I["saddle"], "--point=0,0,0", "--format", "json"]),
    ("wren_unit", ["wren", "--a", "1", "--b", "1", "--z0", "0"]),
    ("wren_23", ["wren", "--a", "2", "--b", "3", "--z0", "1.5", "--format", "json"]),
    ("tangent_sphere", ["tangent", I["sphere"], "--point=1,0,0"]),
    ("tangent_plane_touch", ["tangent", I["paraboloid"], "--plane=-2,0,1,-1"]),
    ("tangent_rays", ["tangent", I["paraboloid"], "--point=1,0,1", "--rays"]),
    ("monge_ellipsoid", ["monge", I["ellipsoid"]]),
    ("monge_seed7", ["monge", I["ellipsoid"], "--seed", "7", "--format", "json"]),
    ("cone_perpendicular", ["cone-ellipse", "--a", "2", "--b", "1", "--h", "1"]),
    ("cone_oblique", ["cone-ellipse", "--a", "2", "--b", "1", "--apex=1,0,2", "--format", "json"]),
    ("cs11_ortho_parallel", ["verify-cs11", "--kind", "Ortoconoide", "--params", "2",
                             "--plane=1,0,0,0.5", "--clause", "parallel"]),
    ("cs11_ambli_parallel", ["verify-cs11", "--kind", "Ambliconoide", "--params", "1,1",
                             "--plane=1,0,0,0.5", "--clause", "parallel"]),
    ("cs11_ambli_vertex", ["verify-cs11", "--kind", "Ambliconoide", "--params", "1,1",
                           "--plane=1,0,0.4,0", "--clause", "vertex", "--format", "json"]),
    ("cs12_anchor", ["verify-cs12", "--N", "1", "--plane=-1,0,1,1"]),
    ("cs13_tilt", ["verify-cs13", "--a", "1", "--b", "1", "--plane=-0.2,0,1,2"]),
    ("samples_circle", ["samples", I["sphere"], "--plane=0,0,1,0", "--samples", "4"]),
    ("samples_ruling", ["samples", I["hyp1"], "--point=1,0,0", "--samples", "2"]),
    ("samples_surface", ["samples", I["ellipsoid"], "--samples", "3"]),
    ("err_degree", ["classify", "x^3"]),
    ("err_syntax", ["classify", "2xy + 1"]),
    ("err_unknown", ["classify", "w^2 + 1"]),
    ("err_not_ellipsoid", ["monge", I["hyp1"]]),
    ("err_usage_missing_plane", ["section", I["sphere"]]),
    ("err_usage_bad_command", ["frobnicate"]),
    ("err_not_tangent", ["tangent", I["paraboloid"], "--plane=0,0,1,-1"]),
    ("err_empty_samples", ["samples", I["sphere"], "--plane=0,0,1,5"]),
]


def render(argv) -> str:
    """Exit code, stdout and stderr of one in-process invocation."""
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return f"exit={code}\n--- stdout\n{out.getvalue()}--- stderr\n{err.getvalue()}"
