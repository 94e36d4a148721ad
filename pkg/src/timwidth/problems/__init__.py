from .instances import (
    FirefighterInstance,
    HamiltonianInstance,
    MatchingInstance,
    TredInstance,
)
from .hamiltonian import ham_tim_plugin, ham_vim_plugin, solve_hamiltonian
from .firefighter import (
    ff_tim_plugin,
    ff_vim_plugin,
    normalize_firefighter,
    solve_firefighter,
)
from .matching import matching_tim_plugin, solve_matching
from .reachability import solve_tred, tred_tim_plugin
from .hardness import CnfError, TwoCnf, gen_firefighter_hardness, hardness_target

__all__ = [
    "CnfError",
    "FirefighterInstance",
    "HamiltonianInstance",
    "MatchingInstance",
    "TredInstance",
    "TwoCnf",
    "ff_tim_plugin",
    "ff_vim_plugin",
    "gen_firefighter_hardness",
    "ham_tim_plugin",
    "ham_vim_plugin",
    "hardness_target",
    "matching_tim_plugin",
    "normalize_firefighter",
    "solve_firefighter",
    "solve_hamiltonian",
    "solve_matching",
    "solve_tred",
    "tred_tim_plugin",
]
