#include <doctest.h>

#include <cmath>

#include "volterra/experiments.hpp"
#include "volterra/symbol_parser.hpp"

using namespace volterra;

TEST_CASE("experiment kind names round trip") {
    for (const char* name : {"resolvent", "tgamma", "membership",
                             "caratheodory", "nilpotent", "crosscheck"}) {
        CHECK(to_string(experiment_kind_from_name(name)) == name);
    }
    CHECK_THROWS_AS(experiment_kind_from_name("bogus"),
                    std::invalid_argument);
}

TEST_CASE("CaseRng is deterministic and stays in range") {
    CaseRng a(42, 7);
    CaseRng b(42, 7);
    for (int i = 0; i < 100; ++i) {
        const double x = a.uniform();
        CHECK(x == b.uniform());
        CHECK(x >= 0.0);
        CHECK(x < 1.0);
    }
    // different case indices decorrelate
    CaseRng c(42, 8);
    int equal = 0;
    CaseRng a2(42, 7);
    for (int i = 0; i < 100; ++i) {
        if (a2.uniform() == c.uniform()) ++equal;
    }
    CHECK(equal == 0);

    CaseRng d(1, 1);
    for (int i = 0; i < 50; ++i) {
        CHECK(std::abs(d.in_disk(2.0)) <= 2.0);
        const double y = d.uniform(-3.0, 5.0);
        CHECK(y >= -3.0);
        CHECK(y <= 5.0);
    }
}

TEST_CASE("resolvent experiment passes and is byte-deterministic") {
    ExperimentSpec spec;
    spec.kind = ExperimentKind::ResolventIdentity;
    spec.cases = 20;
    const Report r1 = run_experiment(spec);
    CHECK(all_passed(r1));
    CHECK(r1.passed == 20);
    CHECK(r1.failed == 0);

    const Report r2 = run_experiment(spec);
    CHECK(emit_report(r1, "json") == emit_report(r2, "json"));
    CHECK(emit_report(r1, "csv") == emit_report(r2, "csv"));
    CHECK(emit_report(r1, "text") == emit_report(r2, "text"));

    ExperimentSpec other = spec;
    other.seed = 9999;
    const Report r3 = run_experiment(other);
    CHECK(all_passed(r3));
    CHECK(emit_report(r1, "json") != emit_report(r3, "json"));
}

TEST_CASE("resolvent experiment detects a perturbed identity") {
    // the identity residual bound 1e-10 must catch a planted error: run the
    // real experiment, then recheck one record by hand with a perturbation
    ExperimentSpec spec;
    spec.kind = ExperimentKind::ResolventIdentity;
    spec.cases = 1;
    spec.symbol = parse_symbol("z");
    const Report r = run_experiment(spec);
    REQUIRE(r.cases.size() == 1);
    CHECK(r.cases[0].pass);

    const PolynomialSymbol g = parse_symbol("z");
    const TruncatedSeries h = TruncatedSeries::constant(Cplx{1, 0});
    const Cplx lambda{1, 0};
    TruncatedSeries f = resolvent_apply(g, lambda, h, 64);
    f = add(f, TruncatedSeries::monomial(1, Cplx{1e-6, 0}));
    const TruncatedSeries residual =
        sub(sub(f, scale(apply_volterra(g, f, 64), 1.0 / lambda)), h);
    CHECK(prefix_distance(residual, TruncatedSeries::zero(0), 64) > 1e-10);
}

TEST_CASE("tgamma experiment: bound holds, bad gamma is skipped") {
    ExperimentSpec spec;
    spec.kind = ExperimentKind::TGammaBound;
    spec.gammas = {Cplx{0.0, 0.0}, Cplx{0.5, 0.0}, Cplx{1.5, 0.0}};
    const Report r = run_experiment(spec);

    // 3 gammas x n in {1,2,3}; |gamma| >= alpha is a skip, never a pass
    CHECK(r.cases.size() == 9);
    CHECK(r.skipped == 3);
    CHECK(r.failed == 0);
    CHECK(r.passed == 6);
    for (const CaseRecord& rec : r.cases) {
        if (rec.skipped) {
            CHECK(rec.note == "hypothesis |gamma| < alpha violated");
            CHECK_FALSE(rec.pass);
        } else {
            CHECK(rec.measured <= rec.bound);
        }
    }
}

TEST_CASE("membership experiment") {
    ExperimentSpec spec;
    spec.kind = ExperimentKind::MembershipDivergence;
    spec.symbol = parse_symbol("z");
    spec.weight = PowerWeight(1, 1);
    const Report r = run_experiment(spec);
    CHECK(r.cases.size() == 5);  // five radii for the single config
    CHECK(all_passed(r));
    bool saw_boundary = false;
    for (const CaseRecord& rec : r.cases) {
        if (rec.note.find("boundary") != std::string::npos) {
            saw_boundary = true;
            CHECK(std::abs(rec.measured - 1.0) <= 0.02);
        }
    }
    CHECK(saw_boundary);
}

TEST_CASE("caratheodory experiment small run") {
    ExperimentSpec spec;
    spec.kind = ExperimentKind::Caratheodory;
    spec.cases = 100;
    const Report r = run_experiment(spec);
    CHECK(all_passed(r));
    CHECK(r.cases.size() == 100);
    for (const CaseRecord& rec : r.cases) {
        CHECK(rec.measured <= rec.bound);
    }
}

TEST_CASE("nilpotent sections experiment") {
    ExperimentSpec spec;
    spec.kind = ExperimentKind::NilpotentSections;
    const Report r = run_experiment(spec);
    CHECK(all_passed(r));
    CHECK(r.cases.size() == 12);  // 4 symbols x 3 sizes
    for (const CaseRecord& rec : r.cases) {
        CHECK(rec.measured == 0.0);  // A^size vanishes exactly
    }
}

TEST_CASE("spectrum cross-check experiment") {
    ExperimentSpec spec;
    spec.kind = ExperimentKind::SpectrumCrossCheck;
    const Report r = run_experiment(spec);
    CHECK(all_passed(r));
    // 3 alphas x 3 degrees x 3 betas x 2 exponents + 3 degrees x 4 a x 2 spaces
    CHECK(r.cases.size() == 54 + 24);
}

TEST_CASE("emit_report formats") {
    ExperimentSpec spec;
    spec.kind = ExperimentKind::NilpotentSections;
    spec.symbol = parse_symbol("z");
    const Report r = run_experiment(spec);

    const std::string js = emit_report(r, "json");
    CHECK(js.find("\"kind\": \"nilpotent\"") != std::string::npos);
    CHECK(js.find("wall_ms") == std::string::npos);
    CHECK(emit_report(r, "json", true).find("wall_ms") != std::string::npos);

    const std::string csv = emit_report(r, "csv");
    CHECK(csv.rfind("index,inputs,measured,bound,pass,skipped,note\n", 0) ==
          0);

    const std::string text = emit_report(r, "text");
    CHECK(text.find("summary: pass=") != std::string::npos);

    CHECK_THROWS_AS(emit_report(r, "xml"), std::invalid_argument);
}

TEST_CASE("all_passed edge cases") {
    Report empty;
    CHECK_FALSE(all_passed(empty));  // an empty run proves nothing
    Report failing;
    failing.cases.resize(1);
    failing.failed = 1;
    CHECK_FALSE(all_passed(failing));
}
