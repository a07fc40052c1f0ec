import random

import pytest

from hypermaps.generators import fig7_example, plane_example, torus_example
from hypermaps.walsh import BipartiteEdge, BipartiteMapSpec, BipartiteVertex


@pytest.fixture(scope="session")
def plane():
    return plane_example()


@pytest.fixture(scope="session")
def torus():
    return torus_example()


@pytest.fixture(scope="session")
def fig7():
    return fig7_example()


def random_bipartite_spec(seed: int, twisted: bool = True) -> BipartiteMapSpec:
    """A random connected bipartite map: a spanning tree plus extra edges,
    shuffled rotations, random twists and label-block sides."""
    rng = random.Random(seed)
    nv, ne = rng.randint(1, 4), rng.randint(1, 4)
    v_names = [f"v{i}" for i in range(nv)]
    e_names = [f"w{i}" for i in range(ne)]
    edges = []
    rot = {name: [] for name in v_names + e_names}
    # spanning tree over the union, alternating sides
    joined_v, joined_e = [v_names[0]], []
    pool = v_names[1:] + e_names
    rng.shuffle(pool)
    for node in pool:
        if node.startswith("v"):
            if not joined_e:
                joined_v.append(node)
                continue
            other = rng.choice(joined_e)
        else:
            other = rng.choice(joined_v)
        bname = f"b{len(edges)}"
        edges.append(bname)
        rot[node].append(bname)
        rot[other].append(bname)
        (joined_v if node.startswith("v") else joined_e).append(node)
    if not joined_e:  # no hyperedge reached: force one edge
        bname = f"b{len(edges)}"
        edges.append(bname)
        rot[v_names[0]].append(bname)
        rot[e_names[0]].append(bname)
        joined_e.append(e_names[0])
    for _ in range(rng.randint(0, 3)):
        bname = f"b{len(edges)}"
        edges.append(bname)
        rot[rng.choice(joined_v)].append(bname)
        rot[rng.choice(joined_e)].append(bname)
    for name in rot:
        rng.shuffle(rot[name])
    vertices = [BipartiteVertex(nm, "V", tuple(rot[nm])) for nm in v_names if rot[nm]]
    vertices += [BipartiteVertex(nm, "E", tuple(rot[nm])) for nm in e_names if rot[nm]]
    spec_edges = [
        BipartiteEdge(
            nm,
            rng.choice((1, -1)) if twisted else 1,
            rng.choice(("V", "E")),
        )
        for nm in edges
    ]
    return BipartiteMapSpec(tuple(vertices), tuple(spec_edges))
