#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Clique numbers of the word-graph chain ``HatH(m+1)``, ``H(m)``, ``J(m)`` next
to the known values of ``A(m, 3)``, collected in a pandas ``DataFrame``.

>>> df = clique_chain(2, 5)
>>> df["omega_J"].tolist()
[1, 2, 2, 4]
"""

import logging

import pandas as pd

from ..coding.codes import a_n3_reference
from ..construction.verification import solve_word_graph
from ..graphs.word_graph import ImplicitGraphSpec

logger = logging.getLogger(__name__)

COLUMNS = ["m", "omega_hatH", "omega_H", "omega_J", "a_ref", "optimal", "agree"]


def clique_chain(m_min, m_max, max_nodes=None, max_seconds=None, force=False):
    """One row per code length ``m`` in ``m_min..m_max``.

    Values whose search ran out of budget are left empty and the row is
    flagged non-optimal.
    """
    rows = []
    for m in range(m_min, m_max + 1):
        row = {"m": m}
        optimal = True
        for column, spec in (("omega_hatH", ImplicitGraphSpec("HatH", m + 1)),
                             ("omega_H", ImplicitGraphSpec("H", m)),
                             ("omega_J", ImplicitGraphSpec("J", m))):
            _, result = solve_word_graph(spec, max_nodes, max_seconds, force)
            row[column] = result.size if result.optimal else None
            optimal &= result.optimal
        row["a_ref"] = a_n3_reference(m)[0]
        row["optimal"] = optimal
        values = {row[c] for c in ("omega_hatH", "omega_H", "omega_J", "a_ref") if row[c] is not None}
        row["agree"] = len(values) == 1
        logger.info("m=%d: %s", m, {c: row[c] for c in COLUMNS[1:5]})
        rows.append(row)
    df = pd.DataFrame(rows, columns=COLUMNS)
    for column in ("omega_hatH", "omega_H", "omega_J", "a_ref"):
        df[column] = df[column].astype("Int64")
    return df
