#include "permabound/bounds.hpp"

#include <cmath>
#include <limits>
#include <mutex>
#include <stdexcept>

#include <json.hpp>

#include "permabound/convolution.hpp"
#include "permabound/errors.hpp"
#include "permabound/permanent.hpp"

namespace permabound {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

double log_factorial(int n) {
    if (n < 0) throw std::invalid_argument("log_factorial: negative argument");
    static std::vector<double> table{0.0, 0.0};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(table.size()) <= n)
        table.push_back(table.back() + std::log(static_cast<double>(table.size())));
    return table[static_cast<std::size_t>(n)];
}

double log_binomial(int n, int k) {
    if (k < 0 || k > n) return kNegInf;
    return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

double eta(int k) {
    if (k < 0) throw std::invalid_argument("eta: negative argument");
    if (k == 0) return 0.0;
    return std::exp(log_factorial(k) / k);
}

double column_norm_product(const ComplexMatrix& z) {
    if (z.rows() == 0 || z.cols() == 0)
        throw std::invalid_argument("column_norm_product: empty matrix");
    double log_q = 0.0;
    for (int c = 0; c < z.cols(); ++c) {
        double s = 0.0;
        for (int j = 0; j < z.rows(); ++j) s += std::norm(z.at(j, c));
        if (s == 0.0) return 0.0;
        log_q += 0.5 * std::log(s);
    }
    return std::exp(log_q);
}

double log_bound_classic(const ComplexMatrix& z) {
    if (!z.square() || z.rows() == 0)
        throw std::invalid_argument("bound_classic: matrix must be square and nonempty");
    int n = z.rows();
    double acc = log_factorial(n);
    for (int c = 0; c < n; ++c) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += std::norm(z.at(j, c));
        if (s == 0.0) return kNegInf;
        acc += 0.5 * (std::log(s) - std::log(static_cast<double>(n)));
    }
    return acc;
}

double bound_classic(const ComplexMatrix& z) { return std::exp(log_bound_classic(z)); }

namespace {

double log_partition_product(const ComplexMatrix& z, const ColumnPartition& partition) {
    BlockColumnMeans alpha = compute_alpha(z, partition);
    double acc = 0.0;
    for (int k = 0; k < partition.block_count(); ++k) {
        int mk = partition.block_size(k);
        double le = log_esym(alpha.block_column(k), mk);
        if (le == kNegInf) return kNegInf;
        acc += le - log_binomial(z.rows(), mk);
    }
    return acc;
}

} // namespace

double log_bound_partition(const ComplexMatrix& z, const ColumnPartition& partition) {
    if (!z.square()) throw std::invalid_argument("bound_partition: matrix must be square");
    if (partition.universe() != IndexSubset::full_set(z.cols()) ||
        partition.universe().universe_size() != z.cols())
        throw std::invalid_argument("bound_partition: partition must cover all columns");
    double prod = log_partition_product(z, partition);
    if (prod == kNegInf) return kNegInf;
    return log_factorial(z.rows()) + 0.5 * prod;
}

double bound_partition(const ComplexMatrix& z, const ColumnPartition& partition) {
    return std::exp(log_bound_partition(z, partition));
}

double log_bound_subsum(const ComplexMatrix& z, const IndexSubset& col_set,
                        const ColumnPartition& partition) {
    if (col_set.empty()) throw std::invalid_argument("bound_subsum: column set must be nonempty");
    if (partition.universe() != col_set)
        throw std::invalid_argument("bound_subsum: partition must cover the column set");
    int l = col_set.size();
    double prod = log_partition_product(z, partition);
    if (prod == kNegInf) return kNegInf;
    return 2.0 * log_factorial(l) + log_binomial(z.rows(), l) + prod;
}

double bound_subsum(const ComplexMatrix& z, const IndexSubset& col_set,
                    const ColumnPartition& partition) {
    return std::exp(log_bound_subsum(z, col_set, partition));
}

double subsum_lhs(const ComplexMatrix& z, const IndexSubset& col_set, std::uint64_t budget) {
    int n = z.rows();
    int l = col_set.size();
    if (l > n) throw std::invalid_argument("subsum_lhs: |L| exceeds the row count");
    std::uint64_t work = binom64(n, l);
    if (l < 63) {
        unsigned __int128 w = static_cast<unsigned __int128>(work) << l;
        if (w > budget) throw size_error("subsum_lhs: verification budget exceeded");
    }
    double sum = 0.0;
    for (IndexSubset rows : iter_subsets(n, l)) sum += std::norm(per_sub(z, rows, col_set));
    return sum;
}

StepBoundReport bound_step(const ComplexMatrix& z, const IndexSubset& col_set,
                           const IndexSubset& col_block) {
    if (col_block.empty() || !col_block.subset_of(col_set))
        throw std::invalid_argument("bound_step: need nonempty M with M subset of L");
    int n = z.rows();
    int l = col_set.size();
    int m = col_block.size();
    if (l > n) throw std::invalid_argument("bound_step: |L| exceeds the row count");

    std::vector<double> beta(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int r : col_block.elements()) s += std::norm(z.at(j, r));
        beta[static_cast<std::size_t>(j)] = s / m;
    }
    double g_sum = esym(WeightVector(beta), m);

    IndexSubset rest = col_set.difference(col_block);
    double h_sq = 0.0;
    for (IndexSubset k_rows : iter_subsets(n, l - m)) h_sq += std::norm(per_sub(z, k_rows, rest));

    double c = conv_coefficients(l, m, n).constant().to_double();
    double mfac = std::exp(log_factorial(m));
    return {mfac * mfac * c * g_sum * h_sq, c};
}

double bound_corollary(const ComplexMatrix& z, const ColumnPartition& partition,
                       const std::vector<int>& representatives, double tol) {
    if (!z.square()) throw std::invalid_argument("bound_corollary: matrix must be square");
    if (partition.universe() != IndexSubset::full_set(z.cols()))
        throw std::invalid_argument("bound_corollary: partition must cover all columns");
    if (static_cast<int>(representatives.size()) != partition.block_count())
        throw std::invalid_argument("bound_corollary: one representative per block required");

    int n = z.rows();
    double acc = log_factorial(n);
    for (int k = 0; k < partition.block_count(); ++k) {
        const IndexSubset& block = partition.blocks()[static_cast<std::size_t>(k)];
        int s_k = representatives[static_cast<std::size_t>(k)];
        if (!block.contains(s_k))
            throw std::invalid_argument("bound_corollary: representative not in its block");
        std::vector<double> w(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            double ref = std::abs(z.at(j, s_k));
            for (int r : block.elements()) {
                double v = std::abs(z.at(j, r));
                if (std::abs(v - ref) > tol * std::max(v, ref))
                    throw std::invalid_argument(
                        "bound_corollary: modulus pattern violated (|z_{j,r}| != |z_{j,s_k}|)");
            }
            w[static_cast<std::size_t>(j)] = ref * ref;
        }
        double le = log_esym(WeightVector(std::move(w)), block.size());
        if (le == kNegInf) return 0.0;
        acc += 0.5 * (le - log_binomial(n, block.size()));
    }
    return std::exp(acc);
}

double bound_bregman_minc(const ComplexMatrix& z) {
    if (!z.square()) throw std::invalid_argument("bound_bregman_minc: matrix must be square");
    if (!z.is_binary())
        throw std::invalid_argument("bound_bregman_minc: entries must all be 0 or 1");
    int n = z.rows();
    double acc = 0.0;
    for (int j = 0; j < n; ++j) {
        int lambda = 0;
        for (int r = 0; r < n; ++r) lambda += static_cast<int>(z.at(j, r).real());
        if (lambda == 0) return 0.0;
        acc += log_factorial(lambda) / lambda;
    }
    return std::exp(acc);
}

PhaseFactorization check_phase_factorizable(const ComplexMatrix& z, double tol) {
    if (z.rows() == 0 || z.cols() == 0)
        throw std::invalid_argument("check_phase_factorizable: empty matrix");
    for (const Complex& v : z.entries())
        if (std::abs(v) <= tol)
            throw std::invalid_argument("check_phase_factorizable: zero (or near-zero) entry");

    std::vector<Complex> zeta(static_cast<std::size_t>(z.cols()));
    for (int r = 0; r < z.cols(); ++r) zeta[static_cast<std::size_t>(r)] = z.at(0, r) / std::abs(z.at(0, r));
    std::vector<Complex> xi(static_cast<std::size_t>(z.rows()));
    for (int j = 0; j < z.rows(); ++j)
        xi[static_cast<std::size_t>(j)] = (z.at(j, 0) / std::abs(z.at(j, 0))) * std::conj(zeta[0]);

    bool ok = true;
    for (int j = 0; j < z.rows() && ok; ++j)
        for (int r = 0; r < z.cols(); ++r) {
            Complex predicted = xi[static_cast<std::size_t>(j)] * zeta[static_cast<std::size_t>(r)] *
                                std::abs(z.at(j, r));
            if (std::abs(z.at(j, r) - predicted) > tol * std::abs(z.at(j, r))) {
                ok = false;
                break;
            }
        }
    return {ok, std::move(xi), std::move(zeta)};
}

std::set<PartitionEqualityCondition> classify_partition_equality(const ComplexMatrix& z,
                                                                 const ColumnPartition& partition,
                                                                 double tol) {
    if (!z.square()) throw std::invalid_argument("classify_partition_equality: matrix must be square");
    int n = z.rows();
    std::set<PartitionEqualityCondition> out;

    double zmax = 0.0;
    for (const Complex& v : z.entries()) zmax = std::max(zmax, std::abs(v));
    double zero_thresh = tol * (zmax > 0.0 ? zmax : 1.0);

    // (A) some block k has >= n - m_k + 1 rows vanishing on the block
    for (int k = 0; k < partition.block_count(); ++k) {
        const IndexSubset& block = partition.blocks()[static_cast<std::size_t>(k)];
        int zero_rows = 0;
        for (int j = 0; j < n; ++j) {
            bool all_zero = true;
            for (int r : block.elements())
                if (std::abs(z.at(j, r)) > zero_thresh) { all_zero = false; break; }
            if (all_zero) ++zero_rows;
        }
        if (zero_rows >= n - block.size() + 1) {
            out.insert(PartitionEqualityCondition::zero_rows_on_block);
            break;
        }
    }

    // (B) phase-factorizable with block-constant modulus y_k > 0
    if (zmax > 0.0) {
        bool all_nonzero = true;
        for (const Complex& v : z.entries())
            if (std::abs(v) <= zero_thresh) { all_nonzero = false; break; }
        if (all_nonzero) {
            try {
                PhaseFactorization pf = check_phase_factorizable(z, tol);
                if (pf.factorizable) {
                    bool block_constant = true;
                    for (int k = 0; k < partition.block_count() && block_constant; ++k) {
                        const IndexSubset& block = partition.blocks()[static_cast<std::size_t>(k)];
                        double y = std::abs(z.at(0, block.min_element()));
                        for (int j = 0; j < n && block_constant; ++j)
                            for (int r : block.elements())
                                if (std::abs(std::abs(z.at(j, r)) - y) > tol * (1.0 + y)) {
                                    block_constant = false;
                                    break;
                                }
                    }
                    if (block_constant) out.insert(PartitionEqualityCondition::rank_one_phase);
                }
            } catch (const std::invalid_argument&) {
                // zero entry slipped past the threshold comparison: not condition (B)
            }
        }
    }
    return out;
}

const char* partition_equality_label(PartitionEqualityCondition c) {
    switch (c) {
        case PartitionEqualityCondition::zero_rows_on_block: return "A";
        case PartitionEqualityCondition::rank_one_phase: return "B";
    }
    return "?";
}

BoundReport make_bound_report(const ComplexMatrix& z, const ColumnPartition* partition,
                              const std::vector<int>* representatives, int exact_cap, double tol,
                              int workers) {
    if (!z.square() || z.rows() == 0)
        throw std::invalid_argument("make_bound_report: matrix must be square and nonempty");
    int n = z.rows();

    BoundReport report;
    if (n <= exact_cap) report.per_abs = std::abs(per_ryser(z, workers, exact_cap));

    auto add = [&](std::string name, double log_value, std::vector<std::string> flags) {
        BoundEntry e;
        e.name = std::move(name);
        e.log_value = log_value;
        e.value = std::exp(log_value);
        if (report.per_abs && e.value > 0.0) e.tightness = *report.per_abs / e.value;
        e.equality_flags = std::move(flags);
        report.bounds.push_back(std::move(e));
    };

    auto flags_for = [&](const ColumnPartition& p) {
        std::vector<std::string> flags;
        for (PartitionEqualityCondition c : classify_partition_equality(z, p, tol))
            flags.emplace_back(partition_equality_label(c));
        return flags;
    };

    add("classic", log_bound_classic(z), flags_for(ColumnPartition::singletons(n)));

    if (partition != nullptr) {
        add("partition", log_bound_partition(z, *partition), flags_for(*partition));
        std::vector<int> reps;
        if (representatives != nullptr) reps = *representatives;
        else
            for (const IndexSubset& b : partition->blocks()) reps.push_back(b.min_element());
        try {
            double v = bound_corollary(z, *partition, reps, tol);
            add("corollary", std::log(v), {});
        } catch (const std::invalid_argument&) {
            // modulus pattern does not hold; corollary not applicable
        }
    }

    if (z.is_binary()) {
        double v = bound_bregman_minc(z);
        add("bregman-minc", v > 0.0 ? std::log(v) : kNegInf, {});
    }
    return report;
}

std::string bound_report_to_json(const BoundReport& report) {
    nlohmann::json j;
    if (report.per_abs) j["per_abs"] = *report.per_abs;
    else j["per_abs"] = nullptr;
    j["bounds"] = nlohmann::json::array();
    for (const BoundEntry& e : report.bounds) {
        nlohmann::json b{{"name", e.name}, {"value", e.value}, {"log_value", e.log_value}};
        if (e.tightness) b["tightness"] = *e.tightness;
        else b["tightness"] = nullptr;
        b["equality_flags"] = e.equality_flags;
        j["bounds"].push_back(std::move(b));
    }
    return j.dump();
}

} // namespace permabound
