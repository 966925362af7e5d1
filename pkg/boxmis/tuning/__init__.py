from boxmis.tuning.bounds import ADVERSARY, BoundQuery, BoundEntry, bounds_table
from boxmis.tuning.sigma import (KTuning, choose_k, dk_derivative, k_multiplier, k_star, lambert_w0,
                                 oblivious_upper_bound, sigma_lower_bound, sigma_upper_bound)
