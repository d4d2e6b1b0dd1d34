#!/usr/bin/env python3

"""
End-to-end check that the largest number of 2-cycles of ``[K_n, g, id]``
equals the clique number of ``HatH(n)``, of ``H(n-1)`` and of ``J(n-1)``, and
the size of the largest binary code of length ``n-1`` and minimum distance 3.

Each quantity is computed independently (a *leg*). Legs that exceed their cap
or budget are reported as skipped, never approximated.
"""

import time
import logging
from collections import OrderedDict

from ..errors import BudgetExceeded, DimensionError
from ..utils import setting, natural_delta
from ..coding.codes import a_n3_reference, hamming_code
from ..dynamics.phase_space import two_cycle_count
from ..graphs.clique import max_clique
from ..graphs.word_graph import ImplicitGraphSpec, materialize
from ..graphs.words import prefix_sum_int
from .oracle import brute_force_eta
from .prescription import HatClique, construct_update_function

logger = logging.getLogger(__name__)

CONSTRUCTION_LEG = "lemma2_lower"
LEGS = ("brute_eta", "omega_hatH", "omega_H", "omega_J", "a_ref", CONSTRUCTION_LEG)


def seed_clique(spec):
    """Known clique of a word graph, from the Hamming code of matching length.

    ``J(m)`` is seeded with the code itself, ``H(m)`` with its prefix-sum
    image and ``HatH(m + 1)`` with the same vectors behind a leading 0. An
    empty list is returned when ``m + 1`` is not a power of 2.
    """
    m = spec.dimension - 1 if spec.kind == "HatH" else spec.dimension
    if m < 3 or (m + 1) & m:
        return []
    code = hamming_code((m + 1).bit_length() - 1)
    if spec.kind == "J":
        return code.values
    return [prefix_sum_int(v, m) for v in code.values]


def solve_word_graph(spec, max_nodes=None, max_seconds=None, force=False, seeded=True):
    """Materialize ``spec`` and compute its clique number.

    Returns:
        :obj:`tuple`: the ``ExplicitGraph`` and its ``CliqueResult``.
    """
    graph = materialize(spec, force=force)
    seed = seed_clique(spec) if seeded else None
    return graph, max_clique(graph, max_nodes=max_nodes, max_seconds=max_seconds, seed=seed)


def verify_theorems(n, max_dimension=None, max_nodes=None, max_seconds=None, force=False):
    """Compute every leg for dimension ``n`` and compare them.

    Args:
        n             (int): number of vertices of ``K_n``, at least 2.
        max_dimension (int, optional): largest ``HatH`` dimension searched,
            ``verify.max_dimension`` setting by default.
        max_nodes     (int, optional): node budget of each clique search.
        max_seconds   (float, optional): time budget of each clique search.
        force         (bool): lift the caps of brute force and search.

    Returns:
        :obj:`dict`: ``{n, legs, agree, skipped, reasons, witness, clique}``;
        ``legs`` maps each leg name to its value or ``None`` when skipped.
    """
    if n < 2:
        raise DimensionError(f"verification needs n >= 2, got {n}")
    if max_dimension is None:
        max_dimension = int(setting("verify.max_dimension", 12))
    m = n - 1
    legs = OrderedDict((leg, None) for leg in LEGS)
    reasons = OrderedDict()
    report = {"n": n, "legs": legs, "agree": False, "skipped": [], "reasons": reasons,
              "witness": None, "clique": None, "a_ref_provenance": None}
    start = time.time()

    try:
        eta, witness = brute_force_eta(n, force=force)
        legs["brute_eta"] = eta
        report["witness"] = witness.bitstring
    except BudgetExceeded as e:
        reasons["brute_eta"] = f"cap: {e}"

    hat_result = None
    searches = [("omega_hatH", ImplicitGraphSpec("HatH", n)),
                ("omega_H", ImplicitGraphSpec("H", m)),
                ("omega_J", ImplicitGraphSpec("J", m))]
    for leg, spec in searches:
        if spec.dimension > max_dimension and not force:
            reasons[leg] = f"cap: {spec} above verify dimension {max_dimension}"
            continue
        try:
            _, result = solve_word_graph(spec, max_nodes, max_seconds, force)
        except BudgetExceeded as e:
            reasons[leg] = f"cap: {e}"
            continue
        if not result.optimal:
            reasons[leg] = f"budget: clique of size {result.size}, bound {result.upper_bound}"
            continue
        legs[leg] = result.size
        if leg == "omega_hatH":
            hat_result = result
        logger.info("%s: omega = %d (%d nodes)", spec, result.size, result.nodes_explored)

    value, tag = a_n3_reference(m)
    if value is None:
        reasons["a_ref"] = f"unknown: no closed form for A({m}, 3)"
    else:
        legs["a_ref"] = value
        report["a_ref_provenance"] = tag

    if hat_result is None:
        reasons[CONSTRUCTION_LEG] = "skipped: no maximum clique of the hat graph"
    else:
        clique = HatClique.from_values(n, hat_result.vertices)
        f = construct_update_function(clique)
        try:
            legs[CONSTRUCTION_LEG] = two_cycle_count(f.system(), force=force)
            report["clique"] = [member.label for member in clique]
        except BudgetExceeded as e:
            reasons[CONSTRUCTION_LEG] = f"cap: {e}"

    report["skipped"] = [leg for leg in LEGS if legs[leg] is None]
    values = {v for v in legs.values() if v is not None}
    report["agree"] = len(values) == 1
    logger.info("verification n=%d: %s (%s)", n,
                "agree" if report["agree"] else "DISAGREE", natural_delta(time.time() - start))
    return report
