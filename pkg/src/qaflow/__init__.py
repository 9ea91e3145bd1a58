"""qaflow: application-specific superconducting quantum processor design.

Pipeline: parse a quantum program, profile its two-qubit gate structure,
place qubits on a 2D lattice, select qubit buses, allocate design
frequencies, then score designs by Monte Carlo fabrication yield and
post-mapping gate count.
"""

from .arch import ArchQubit, Architecture, build_architecture
from .buses import (
    BusPlan,
    ConnectivityGraph,
    Square,
    connectivity,
    cross_weight,
    edge_bus_plan,
    enumerate_squares,
    max_bus_plan,
    random_bus_plan,
    select_buses,
)
from .flow import (
    CONFIGS,
    SweepRow,
    baseline_arch,
    generate_architecture,
    k_star,
    pareto_sweep,
    run_flow,
    write_rows_csv,
)
from .freqalloc import (
    CANDIDATE_FREQS_GHZ,
    CENTER_FREQ_GHZ,
    FIVE_FREQS_GHZ,
    FrequencyPlan,
    allocate,
    center_qubit,
    five_frequency_plan,
    local_region,
)
from .layout import Coord, Placement, candidate_nodes, node_cost, place_qubits
from .mapping import RoutedResult, initial_mapping, performance_metric, route
from .profiling import (
    CouplingDegreeList,
    CouplingMatrix,
    CouplingProfile,
    coupling_matrix,
    degree_list,
    profile_circuit,
)
from .qasm import Circuit, Gate, GateKind, parse_qasm, parse_qasm_file, to_qasm, two_qubit_gate_count
from .yieldsim import (
    CollisionRule,
    RuleSet,
    SimParams,
    YieldEstimate,
    check_collision,
    default_rules,
    enumerate_checks,
    load_rules,
    sample_fabrication,
    simulate_yield,
    simulate_yield_graph,
)

__version__ = "0.1.0"
