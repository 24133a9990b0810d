import logging

import fire

from algebra.counting import ResourceCapError
from constructions.classical import classical_gq
from constructions.hyperoval import regular_hyperoval, t2_star
from data.documents import (
    DocumentError,
    SieveReport,
    load_geometry,
    load_group,
    save_geometry,
    save_group,
)
from geometry.graph import incidence_graph
from geometry.quadrangle import GQVerificationError, verify_gq
from permgroup.group import DEFAULT_SEED
from sieve.feasibility import OrderPair, evaluate_case, parameter_feasible
from sieve.tables import replicate_table
from symmetry.arcs import is_locally_s_arc_transitive
from symmetry.collineations import CollineationGroup, induced_collineations
from symmetry.flags import antiflag_orbits, flag_orbits
from utils.console import CONSOLE, banner, print_report, setup_logging
from utils.seed import seed_everything

seed_everything(DEFAULT_SEED)

logger = logging.getLogger("gq")

EXIT_VALIDATION = 1
EXIT_IO = 2


def _fail(code: int, message: str):
    logger.error(message)
    raise SystemExit(code)


def _ints(value) -> list:
    """Fire hands over "2,3" as a tuple, a bare number as an int, and quoted text as a str."""
    if isinstance(value, (tuple, list)):
        return [int(x) for x in value]
    if isinstance(value, int):
        return [value]
    return [int(x) for x in str(value).replace(" ", "").split(",") if x]


def _loadStructure(path: str):
    try:
        document = load_geometry(path)
        return document, document.to_structure()
    except (OSError, DocumentError) as e:
        _fail(EXIT_IO, f"Cannot read geometry {path}: {e}")


def construct(
    family: str = None,
    q: int = None,
    t2star: bool = False,  # T2*(O) from the regular hyperoval of PG(2,q) instead of a classical family
    output: str = None,
    group_output: str = None,  # Also write the induced collineation group
    seed: int = DEFAULT_SEED,
    cap: int = None,  # Overrides the field-order cap of the family
    verbose: bool = False,
):
    setup_logging(verbose)
    seed_everything(seed)
    if q is None or (family is None) == (not t2star):
        _fail(EXIT_VALIDATION, "Give --q and exactly one of --family or --t2star")
    tag = "t2star" if t2star else str(family)

    # Experiment info
    banner("CONSTRUCT", construction=tag, q=q, output=output, group_output=group_output, seed=seed)

    try:
        Q = t2_star(regular_hyperoval(q)) if t2star else classical_gq(family, q, cap=cap)
    except GQVerificationError as e:
        _fail(EXIT_VALIDATION, f"Construction does not verify: {e} (witness {e.witness})")
    except (ResourceCapError, ValueError) as e:
        _fail(EXIT_VALIDATION, str(e))

    CONSOLE.print(f"\tOrder: {Q.order}")
    CONSOLE.print(f"\tPoints: {Q.num_points}")
    CONSOLE.print(f"\tLines: {Q.num_lines}")

    if output:
        save_geometry(Q, output, metadata={"construction": tag, "q": q})
        logger.info(f"Geometry written to {output}")
    if group_output:
        G = induced_collineations(Q, seed=seed)
        save_group(G.group, group_output)
        CONSOLE.print(f"\tCollineation group order: {G.order()}")
        logger.info(f"Group written to {group_output}")


def verify(path: str, verbose: bool = False):
    setup_logging(verbose)

    # Experiment info
    banner("VERIFY", path=path)

    document, structure = _loadStructure(path)
    try:
        Q = verify_gq(structure)
    except GQVerificationError as e:
        CONSOLE.print(f"\tViolation: {e.code.value}")
        CONSOLE.print(f"\tWitness: {e.witness}")
        _fail(EXIT_VALIDATION, e.message)
    if document.order is not None and document.order != Q.order:
        _fail(EXIT_VALIDATION, f"Document claims order {document.order}, verified order is {Q.order}")

    for identity, holds in Q.check_counts().items():
        CONSOLE.print(f"\t{identity.capitalize()}: {'OK' if holds else 'FAILED'}")
    CONSOLE.print(f"({Q.s},{Q.t}), OK")


def symmetry(
    geometry: str,
    group: str,
    test: str = "antiflag",  # "flag", "antiflag" or "local-arc=s"
    seed: int = DEFAULT_SEED,
    verbose: bool = False,
):
    setup_logging(verbose)
    seed_everything(seed)

    # Experiment info
    banner("SYMMETRY", geometry=geometry, group=group, test=test)

    _, structure = _loadStructure(geometry)
    try:
        generators = load_group(group)
    except (OSError, DocumentError) as e:
        _fail(EXIT_IO, f"Cannot read group {group}: {e}")
    try:
        Q = verify_gq(structure)
        G = CollineationGroup(Q, generators.to_group(seed))
    except (GQVerificationError, DocumentError, ValueError) as e:
        _fail(EXIT_VALIDATION, str(e))

    test = str(test).strip().lower()
    if test in ("flag", "antiflag"):
        orbits = flag_orbits(G, Q) if test == "flag" else antiflag_orbits(G, Q)
        total = sum(orbits)
        CONSOLE.print(f"\t{test.capitalize()}-transitive: {len(orbits) == 1}")
        CONSOLE.print(f"\tOrbits: {len(orbits)} ({', '.join(f'{size}/{total}' for size in orbits)})")
    elif test.startswith("local-arc="):
        s = int(test.split("=", 1)[1])
        verdict = is_locally_s_arc_transitive(G, incidence_graph(Q), s)
        CONSOLE.print(f"\tLocally {s}-arc-transitive: {verdict}")
        CONSOLE.print(f"\tVertex orbits: {[len(orbit) for orbit in G.group.orbits()]}")
    else:
        _fail(EXIT_IO, f"Unknown test {test!r}; expected flag, antiflag or local-arc=s")


def sieve(
    table: str = None,
    order: int = None,
    t=None,  # One value of t or a comma-separated list
    pair=None,  # s,t
    q: int = None,  # Field order for q-part reporting with --order
    json: bool = False,
    verbose: bool = False,
):
    setup_logging(verbose)
    if sum(x is not None for x in (table, order, pair)) != 1:
        _fail(EXIT_IO, "Give exactly one of --table, --order (with --t) or --pair")

    try:
        if table is not None:
            report = SieveReport.from_table(replicate_table(table))
        elif order is not None:
            if t is None:
                _fail(EXIT_IO, "--order needs --t")
            report = SieveReport.from_case(evaluate_case(int(order), _ints(t), q))
        else:
            values = _ints(pair)
            if len(values) != 2:
                _fail(EXIT_IO, f"--pair needs two integers, got {pair!r}")
            pair = OrderPair(*values)
            report = SieveReport.from_verdict(pair, parameter_feasible(pair))
    except ValueError as e:
        _fail(EXIT_IO, str(e))

    print_report(report.to_dict(), as_json=json)
    if report.exit_code:
        raise SystemExit(report.exit_code)


if __name__ == "__main__":
    fire.Fire({"construct": construct, "verify": verify, "symmetry": symmetry, "sieve": sieve})
