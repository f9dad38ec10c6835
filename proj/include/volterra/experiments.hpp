#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "volterra/operators.hpp"
#include "volterra/spectra.hpp"
#include "volterra/symbol.hpp"
#include "volterra/weights.hpp"

namespace volterra {

enum class ExperimentKind {
    ResolventIdentity,
    TGammaBound,
    MembershipDivergence,
    Caratheodory,
    NilpotentSections,
    SpectrumCrossCheck,
};

ExperimentKind experiment_kind_from_name(std::string_view name);
std::string to_string(ExperimentKind k);

/// Every field beyond `kind` has a per-kind default matching the stock
/// verification run; overriding any of them narrows or redirects the run.
struct ExperimentSpec {
    ExperimentKind kind = ExperimentKind::ResolventIdentity;
    std::uint64_t seed = 2026;
    int degree = kDefaultWorkingDegree;
    int cases = 0;  // 0 -> kind default
    std::optional<PolynomialSymbol> symbol;
    std::optional<PowerWeight> weight;
    std::optional<GrowthCondition> growth;
    std::vector<Cplx> lambdas;
    std::vector<Cplx> gammas;
};

struct CaseRecord {
    int index = 0;
    std::string inputs;
    double measured = 0.0;
    double bound = 0.0;
    bool pass = false;
    bool skipped = false;  // hypothesis violated: structured skip, not a fail
    std::string note;
};

struct Report {
    std::string kind;
    std::string spec_echo;
    std::uint64_t seed = 0;
    int degree = 0;
    std::vector<CaseRecord> cases;
    int passed = 0;
    int failed = 0;
    int skipped = 0;
    std::string tool_version;
    double wall_ms = 0.0;
};

Report run_experiment(const ExperimentSpec& spec);

bool all_passed(const Report& r);

/// format in {"json", "csv", "text"}; throws on anything else. Timing is
/// excluded by default so that identical spec+seed yields identical bytes.
std::string emit_report(const Report& r, std::string_view format,
                        bool include_timing = false);

inline constexpr const char* kToolVersion = "volterra-spectra 1.0.0";

/// Deterministic per-case RNG stream (splitmix64-seeded xorshift), so case
/// ordering and thread count never change the drawn values.
class CaseRng {
public:
    CaseRng(std::uint64_t seed, std::uint64_t case_index);
    double uniform();                    // [0, 1)
    double uniform(double lo, double hi);
    Cplx unit_square();                  // Re, Im uniform in [-1, 1]
    Cplx in_disk(double radius);

private:
    std::uint64_t next_raw();
    std::uint64_t state_;
};

}  // namespace volterra
