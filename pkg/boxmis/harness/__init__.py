from boxmis.harness.games import adaptive_game, dominating_optimality_sweep
from boxmis.harness.montecarlo import McEstimate, mc_estimate, mc_ratio
from boxmis.harness.record import ExperimentRecord
from boxmis.harness.reproduce import TABLE, ResultTable, compare_golden, reproduce
