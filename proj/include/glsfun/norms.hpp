#pragma once

#include <vector>

#include "glsfun/gls_core.hpp"

namespace glsfun {

// Purely atomic measure space, either a probability space or a truncated
// model of an infinite measure (finite total mass M, geometrically spread
// atom weights standing in for the escaping tail).
class DiscreteMeasureSpace {
public:
    enum class Kind { probability, truncated_infinite };

    static DiscreteMeasureSpace uniform_probability(int n);
    static DiscreteMeasureSpace geometric_truncated(double total_mass, int n,
                                                    double spread = 1e4);
    // Externally supplied atom weights (all finite and positive).
    static DiscreteMeasureSpace from_weights(std::vector<double> w, Kind kind);

    const std::vector<double>& weights() const { return w_; }
    double total_mass() const { return total_; }
    Kind kind() const { return kind_; }
    size_t size() const { return w_.size(); }

private:
    DiscreteMeasureSpace(std::vector<double> w, Kind kind);
    std::vector<double> w_;
    double total_;
    Kind kind_;
};

// 0/1 vector whose support is a greedy smallest-atoms-first prefix. The mass
// actually achieved is reported and should be used on both sides of any
// identity involving the target mass.
struct Indicator {
    std::vector<double> values;
    double achieved_mass;
};

Indicator indicator_of_mass(const DiscreteMeasureSpace& space, double target_mass);

// |f| compressed to unique values (descending) with aggregated masses; makes
// modular and L_p sums O(#distinct values).
struct Distribution {
    std::vector<double> values;
    std::vector<double> masses;
};

Distribution distribution_of(const DiscreteMeasureSpace& space, const std::vector<double>& f);

double lp_norm(const DiscreteMeasureSpace& space, const std::vector<double>& f, double p);

// sup over the support grid of |f|_p / psi(p), sharing the grid and
// refinement of fundamental_direct. An uncertifiable tail past the
// truncation point throws TailUncertain.
double gls_norm(const DiscreteMeasureSpace& space, const std::vector<double>& f,
                const GeneratingFunction& psi);

double modular(const DiscreteMeasureSpace& space, const std::vector<double>& f,
               const OrliczFunction& N);  // sum of w_i * N(f_i)

// inf {k : modular(f/k) <= 1}, by bisection keeping the feasible endpoint.
double luxemburg_norm(const DiscreteMeasureSpace& space, const std::vector<double>& f,
                      const OrliczFunction& N);

struct AmemiyaResult {
    double value;
    bool bracketed;  // false when the minimizer stuck to the search boundary
};

// inf_{v>0} (1 + modular(v f)) / v; equals the Orlicz norm and sandwiches the
// Luxemburg norm within a factor of two.
AmemiyaResult orlicz_norm_amemiya(const DiscreteMeasureSpace& space,
                                  const std::vector<double>& f, const OrliczFunction& N);

// Row per sample function: GLS norm against Luxemburg norm and their ratio.
ComparisonReport equivalence_report(const DiscreteMeasureSpace& space,
                                    const std::vector<std::vector<double>>& fs,
                                    const GeneratingFunction& psi, const OrliczFunction& N);

}  // namespace glsfun
