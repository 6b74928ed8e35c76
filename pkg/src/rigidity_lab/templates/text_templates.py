# Rigidity test / profile
VERDICT_TEXT_TEMPLATE = """{kind} at d={dim}
rank over GF(p): {observed_rank}/{required_rank} after {trials} trial(s), seed {seed}
"""

PROFILE_TEXT_TEMPLATE = """rigidity number: {rigidity_number}
{rows}
non-monotone dimensions: {non_monotone}
"""

PROFILE_ROW_TEMPLATE = '  d={dim:<3} {kind:<17} rank {observed_rank}/{required_rank}'

# Partition verification
VERIFICATION_TEXT_TEMPLATE = """{verdict}
{detail}
oracle-checked parts: {oracle_checked}
hierarchy-only parts: {oracle_divergences}
"""

BOUND_TEXT_TEMPLATE = """lambda_{lambda_index}(L^-) = {lambda_value:.12g}
min a(G_ij)/2 = {min_half_a:.12g}
bound holds: {holds} (tol {tol:g})
|L^- - (M+T)/2| max entry: {decomposition_error:.3e}
"""

PROPERTY_TEXT_TEMPLATE = """{property}: {kind} ({mode})
witness: {witness}
search moves: {search_budget}
"""

CONSTRUCTION_TEXT_TEMPLATE = """success: {success} after {attempts} attempt(s)
min cross-degree {min_cross_degree} against target {target:.3f}
parts: {parts}
{reason}
"""

# Experiment reports
REPORT_TEXT_TEMPLATE = """experiment: {experiment} (schema v{schema_version}, rigidity-lab {artifact_version})
master seed: {master_seed}
parameters:
{parameters}
aggregate:
{aggregate}
trials: {trial_count}, wall clock {wall_clock:.2f}s
"""

HYPEROCTAHEDRAL_ROW_TEMPLATE = '  n={n:<4} computed={computed:<4} formula={formula:<4} match={match}'

KEY_VALUE_ROW_TEMPLATE = '  {key}: {value}'
