#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# States and base graphs
from .state import SystemState, as_state, inv, vector_sum, all_states
from .graph import BaseGraph

# Vertex functions and system maps
from .vertex_function import VertexFunction
from .sds import (
    UpdateOrder,
    SdsDefinition,
    neighbor_profile,
    local_update,
    intermediate_map,
    trajectory,
    sds_map,
    sds_map_array,
    is_two_periodic,
)

# Phase spaces
from .phase_space import (
    PhaseSpace,
    phase_space,
    two_cycle_count,
    fixed_points,
    constant_fixed_point_witness,
    max_two_cycles_over_orders,
)

__all__ = [
    "BaseGraph",
    "PhaseSpace",
    "SdsDefinition",
    "SystemState",
    "UpdateOrder",
    "VertexFunction",
    "all_states",
    "as_state",
    "constant_fixed_point_witness",
    "fixed_points",
    "intermediate_map",
    "inv",
    "is_two_periodic",
    "local_update",
    "max_two_cycles_over_orders",
    "neighbor_profile",
    "phase_space",
    "sds_map",
    "sds_map_array",
    "trajectory",
    "two_cycle_count",
    "vector_sum",
]
