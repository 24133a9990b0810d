import os

from constructions.classical import classical_gq
from constructions.hyperoval import regular_hyperoval, t2_star
from data.documents import save_geometry, save_group
from permgroup.group import DEFAULT_SEED
from symmetry.collineations import induced_collineations

FIXTURES_PATH = "./fixtures"

# (file stem, construction tag, q)
FIXTURES = (
    ("W3_2", "W3", 2),
    ("W3_3", "W3", 3),
    ("Q4_3", "Q4", 3),
    ("Qminus5_2", "Qminus5", 2),
    ("H3_2", "H3", 2),
    ("H4_2", "H4", 2),
    ("t2star_4", "t2star", 4),
)


########################################################## BUILD FIXTURES


def build_fixture(stem: str, tag: str, q: int, path: str = FIXTURES_PATH, seed: int = DEFAULT_SEED):
    """Write <stem>.geometry.json and <stem>.group.json under path."""
    Q = t2_star(regular_hyperoval(q)) if tag == "t2star" else classical_gq(tag, q)
    save_geometry(Q, os.path.join(path, f"{stem}.geometry.json"), metadata={"construction": tag, "q": q})
    G = induced_collineations(Q, seed=seed)
    save_group(G.group, os.path.join(path, f"{stem}.group.json"))
    return Q, G


def build_all(path: str = FIXTURES_PATH, seed: int = DEFAULT_SEED):
    os.makedirs(path, exist_ok=True)
    for stem, tag, q in FIXTURES:
        Q, G = build_fixture(stem, tag, q, path, seed)
        print(f"\t{stem}: order {Q.order}, {Q.num_points} points, group order {G.order()}")


if __name__ == "__main__":
    print("Building fixtures...")
    build_all()
    print("Done!")
