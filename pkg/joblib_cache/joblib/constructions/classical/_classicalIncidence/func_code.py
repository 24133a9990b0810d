# first line: 90
@MEMORY.cache
def _classicalIncidence(tag: str, q: int) -> tuple:
    family = ClassicalFamily.parse(tag)
    kind, n = family.form
    space = FormSpace.standard(kind, n, q)
    F = space.field
    points = space.singular_points()
    keys = vector_keys(F, points)
    lines = []
    for subspace in enumerate_totally_singular(space, 2):
        on_line = np.searchsorted(keys, vector_keys(F, subspace.points()))
        lines.append(tuple(sorted(on_line.tolist())))
    lines.sort()
    return len(points), lines
