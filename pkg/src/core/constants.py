"""
Shared constants for Stickel.
"""

# Cache file headers; bump the version when a format changes
AP_CACHE_MAGIC = "STICKEL-AP v1"
PERIOD_MAP_MAGIC = "STICKEL-PHI v1"

# Largest prime reduce_mod_p will count points for
DEFAULT_POINT_COUNT_BOUND = 10**6

# Eigenspace cutting gives up past this prime
DEFAULT_EIGEN_PRIME_BOUND = 1000

# Augmentation filtration depth
DEFAULT_R_MAX = 20

# Decimal digits for L-values
DEFAULT_DIGITS = 8

# Extra working precision on top of the requested digits
GUARD_DIGITS = 10

# n_max = ceil(TRUNCATION_KAPPA * m * sqrt(N) * digits). The smoothed series
# decays like exp(-2*pi*n / (A * m * sqrt(N))) with A <= 6/5, so n_max terms
# leave a tail below 10^-(digits+3) for every digits >= 4.
TRUNCATION_KAPPA = 0.75

# Second splitting point of the approximate functional equation
SPLIT_POINT = (6, 5)

# Character-table tolerance (complex doubles)
CHARACTER_TOLERANCE = 1e-9

# Special-value fit tolerance, relative to max(1, |B|)
SPECIAL_VALUE_TOLERANCE = 1e-6

# Largest modulus the verify battery feeds to the special-value check
DEFAULT_SPECIAL_MAX_MODULUS = 16

# Primes tried for norm relations in the verify battery
NORM_RELATION_PRIMES = (2, 3, 5, 7, 11)

# Largest modulus the battery builds while checking norm relations
NORM_RELATION_MAX_MODULUS = 160

# Fixture used to pin relation orientations: 11a1
PINNING_CURVE = ("11a1", (0, -1, 1, -10, -20), 11)
