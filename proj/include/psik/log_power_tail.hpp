#pragma once

#include "psik/precision.hpp"
#include "psik/series_value.hpp"

#include <functional>
#include <vector>

namespace psik {

/// y^{-w} (poly[0] + poly[1] log y + poly[2] log^2 y + ...).
struct LogPowerTerm {
  PrecReal w;
  std::vector<PrecReal> poly;
};

/// Terms of one order in a large-y expansion.
using LogPowerGroup = std::vector<LogPowerTerm>;

/// d/dy of a single term.
LogPowerTerm differentiate(const LogPowerTerm& term);
LogPowerGroup differentiate(const LogPowerGroup& group, unsigned times = 1);

/// Merges terms with equal exponent and drops vanishing ones.
LogPowerGroup simplify(const LogPowerGroup& group);

PrecReal evaluate(const LogPowerGroup& group, const PrecReal& y);

/// Group g of the large-y expansion of psi_k^{(m)}(y): g = 0 holds the
/// log^{k+1}(y)/(k+1) - log^k(y)/(2y) part, g >= 1 the B_{2g} term.
LogPowerGroup psi_k_expansion_group(unsigned k, unsigned m, unsigned g);

/// Group g >= 1 of zeta(z, y) - y^{1-z}/(z-1) - y^{-z}/2, i.e.
/// B_{2g}/(2g)! (z)_{2g-1} y^{-z-2g+1}. Group 0 is empty.
LogPowerGroup hurwitz_remainder_group(const PrecReal& z, unsigned g);

/// sum_{j >= j0} f(c (j + d)) for f given by the group, in closed form through
/// Hurwitz zeta derivatives at j0 + d. Every exponent must exceed 1.
PrecReal group_tail_sum(const LogPowerGroup& group, const PrecReal& c, const PrecReal& d, long j0);

struct TailOptions {
  long n0 = 2000;            ///< direct terms
  unsigned max_groups = 60;  ///< expansion depth limit
};

/// sum_{j >= 1} a_j where a_j = direct(j) for j < J0 and, beyond, a_j is
/// replaced by the expansion sum_g group(g) evaluated at y = c (j + d).
/// J0 = max(n0, ceil(Y/c - d)) with Y = max(30, D/2) so the expansion is used
/// only where it is sharp. The bound is the first omitted group's tail plus
/// the direct terms' own bounds and rounding.
SeriesValue<PrecReal> sum_with_tail(const std::function<SeriesValue<PrecReal>(long)>& direct,
                                    const std::function<LogPowerGroup(unsigned)>& group, const PrecReal& c,
                                    const PrecReal& d, const TailOptions& options = {});

/// Vector-valued variant: several series over the same j share one pass.
std::vector<SeriesValue<PrecReal>> sum_with_tail(
    std::size_t count, const std::function<std::vector<SeriesValue<PrecReal>>(long)>& direct,
    const std::function<LogPowerGroup(std::size_t, unsigned)>& group, const PrecReal& c, const PrecReal& d,
    const TailOptions& options = {});

/// First direct index j0 used by sum_with_tail.
long tail_start(const PrecReal& c, const PrecReal& d, const TailOptions& options);

}  // namespace psik
