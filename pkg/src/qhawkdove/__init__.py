"""Quantized Hawk-Dove game on the two-parameter strategy space."""
from .equilibrium import (
    BestResponses, EquilibriumReport, analyze, best_responses, critical_gamma,
    is_ess, is_nash, is_pareto_optimal, pareto_dominator, payoffs_against_quantum,
)
from .ewl_protocol import (
    ClosedFormReport, GameOutcome, expected_payoffs, final_state, payoff_closed_form,
    play, validate_closed_form,
)
from .exceptions import DomainError, HierarchyError
from .game_model import (
    ClassicalEquilibrium, PayoffMatrix, classical_mixed_ess, classical_payoff,
    make_payoff_matrix,
)
from .quantum_core import concurrence, entangler, kron
from .strategy_space import (
    DOVE, HAWK, QUANTUM, Strategy, classical_embedding, named_strategies, to_unitary,
)

__version__ = "0.1.0"
