#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mlein/mlein.h"
#include "support/reference.hpp"

#include <cmath>
#include <cstring>
#include <string>

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;

struct Ctx {
    mlein_ctx *p;
    Ctx() : p(mlein_ctx_new()) {}
    ~Ctx() { mlein_ctx_free(p); }
};

double cabs(mlein_complex c) { return std::hypot(c.re, c.im); }
} // namespace

TEST_CASE("context lifecycle and setter validation") {
    Ctx ctx;
    REQUIRE(ctx.p != nullptr);
    CHECK(mlein_ctx_set_precision_digits(ctx.p, 60) == MLEIN_OK);
    CHECK(mlein_ctx_set_precision_digits(ctx.p, 10) == MLEIN_ERR_USAGE);
    CHECK(mlein_ctx_set_rel_tol(ctx.p, 1e-14) == MLEIN_OK);
    CHECK(mlein_ctx_set_rel_tol(ctx.p, 0.5) == MLEIN_ERR_USAGE);
    CHECK(mlein_ctx_set_stokes(ctx.p, 1) == MLEIN_OK);
    CHECK(mlein_ctx_set_max_alg_terms(ctx.p, 19) == MLEIN_OK);
    CHECK(mlein_ctx_set_max_alg_terms(ctx.p, 0) == MLEIN_ERR_USAGE);
    CHECK(mlein_ctx_set_gamma_param(ctx.p, 1.5) == MLEIN_OK);
    CHECK(mlein_ctx_set_gamma_param(ctx.p, -1.0) == MLEIN_ERR_USAGE);
    CHECK(mlein_ctx_set_precision_digits(nullptr, 50) == MLEIN_ERR_USAGE);
}

TEST_CASE("series evaluation through the C API") {
    Ctx ctx;
    mlein_complex out;
    int terms = 0;
    double omitted = 0.0;
    CHECK(mlein_series_eval(ctx.p, MLEIN_FN_EIN, 1.0, 1.0, 5.0, 0.0, &out,
                            &terms, &omitted) == MLEIN_OK);
    CHECK(std::abs(out.re - refdata::kEin11_at5) < 1e-13);
    CHECK(out.im == 0.0);
    CHECK(terms > 5);

    CHECK(mlein_series_eval(ctx.p, MLEIN_FN_EIN, 1.0, 2.0, 10.0, 0.0, &out,
                            nullptr, nullptr) == MLEIN_OK);
    CHECK(std::abs(out.re - refdata::kEin12_at10) < 1e-12);

    CHECK(mlein_series_eval(ctx.p, MLEIN_FN_SIN, 1.0, 1.0, kPi, 0.0, &out,
                            nullptr, nullptr) == MLEIN_OK);
    CHECK(std::abs(out.re - refdata::kSi_pi) < 1e-13);
}

TEST_CASE("asymptotic evaluation and report fields") {
    Ctx ctx;
    mlein_complex out;
    mlein_report rep;
    CHECK(mlein_asym_eval(ctx.p, MLEIN_FN_EIN, 1.0, 1.0, 20.0, 0.0, &out,
                          &rep) == MLEIN_OK);
    CHECK(rep.branch == MLEIN_BR_LOG_CASE);
    CHECK(std::abs(out.re - (std::log(20.0) + refdata::kEulerGamma)) <
          2.0 * refdata::kE1_at20);
    CHECK(rep.n_trunc >= 1);

    CHECK(mlein_asym_eval(ctx.p, MLEIN_FN_EIN, 2.0, 1.0, 10.0, 0.0, &out,
                          &rep) == MLEIN_OK);
    CHECK(rep.branch == MLEIN_BR_ALPHA2);
    CHECK(out.im == 0.0);
}

TEST_CASE("oracle strings carry 30 significant digits") {
    Ctx ctx;
    mlein_complex out;
    char re[64], im[64];
    CHECK(mlein_oracle_eval(ctx.p, MLEIN_FN_EIN, 0.5, 1.0, 10.0, 0.0, &out,
                            re, im, sizeof(re)) == MLEIN_OK);
    CHECK(std::abs(out.re - refdata::kEinHalf1_at10) < 1e-13);
    // "d.dddddddddddddddddddddddddddddE+ee" with 30 significant digits
    std::string s(re);
    CHECK(s.find('e') != std::string::npos);
    CHECK(s.substr(0, 31) ==
          std::string("3.89129176388624418109235628499").substr(0, 31));
}

TEST_CASE("eval_report method=2 satisfies the EvalReport invariant") {
    Ctx ctx;
    mlein_report rep;
    CHECK(mlein_eval_report(ctx.p, MLEIN_FN_EIN, 1.0, 1.0, 10.0, 0.0, 2,
                            &rep) == MLEIN_OK);
    double manual = std::hypot(rep.asym_value.re - rep.series_value.re,
                               rep.asym_value.im - rep.series_value.im) /
                    cabs(rep.series_value);
    CHECK(rep.abs_rel_error == doctest::Approx(manual).epsilon(1e-12));
    // The alpha=1 plain expansion misses exactly the E1 term.
    CHECK(rep.abs_rel_error == doctest::Approx(1.442e-6).epsilon(0.05));
}

TEST_CASE("asym_vs_oracle matches a Table 1 entry") {
    Ctx ctx;
    double err = 0.0;
    mlein_report rep;
    CHECK(mlein_asym_vs_oracle(ctx.p, MLEIN_FN_EIN, 1.0, 1.0, 10.0, 0.0,
                               &err, &rep) == MLEIN_OK);
    CHECK(err == doctest::Approx(1.442e-6).epsilon(0.05));
    CHECK(rep.abs_rel_error == err);
}

TEST_CASE("error codes propagate") {
    Ctx ctx;
    mlein_complex out;
    // Asymptotics of the bare Mittag-Leffler function are not offered.
    CHECK(mlein_asym_eval(ctx.p, MLEIN_FN_ML, 1.0, 1.0, 10.0, 0.0, &out,
                          nullptr) == MLEIN_ERR_USAGE);
    // Sector violation: Sin at alpha=1 off the real axis.
    CHECK(mlein_asym_eval(ctx.p, MLEIN_FN_SIN, 1.0, 1.0, 10.0, 0.5, &out,
                          nullptr) == MLEIN_ERR_DOMAIN);
    // |z| below the asymptotic threshold.
    CHECK(mlein_asym_eval(ctx.p, MLEIN_FN_EIN, 1.0, 1.0, 1.0, 0.0, &out,
                          nullptr) == MLEIN_ERR_DOMAIN);
    // alpha > 2 unsupported.
    CHECK(mlein_asym_eval(ctx.p, MLEIN_FN_EIN, 2.5, 1.0, 10.0, 0.0, &out,
                          nullptr) == MLEIN_ERR_DOMAIN);
    CHECK(mlein_series_eval(ctx.p, 99, 1.0, 1.0, 1.0, 0.0, &out, nullptr,
                            nullptr) == MLEIN_ERR_USAGE);
}

TEST_CASE("stokes flag routes the alpha=1 axis evaluation") {
    Ctx ctx;
    mlein_complex plain, corrected;
    mlein_report rep;
    CHECK(mlein_asym_eval(ctx.p, MLEIN_FN_EIN, 1.0, 1.0, 10.0, 0.0, &plain,
                          nullptr) == MLEIN_OK);
    mlein_ctx_set_stokes(ctx.p, 1);
    CHECK(mlein_asym_eval(ctx.p, MLEIN_FN_EIN, 1.0, 1.0, 10.0, 0.0,
                          &corrected, &rep) == MLEIN_OK);
    CHECK(rep.branch == MLEIN_BR_STOKES);
    double ref = refdata::ein_classical(10.0);
    CHECK(std::abs(corrected.re - ref) < std::abs(plain.re - ref));
}

TEST_CASE("asym_leading is available below the asymptotic threshold") {
    Ctx ctx;
    mlein_complex out;
    CHECK(mlein_asym_leading(ctx.p, MLEIN_FN_SIN, 1.0, 1.0, 0.5, 0.0,
                             &out) == MLEIN_OK);
    CHECK(std::abs(out.re - kPi / 2.0) < 1e-10);
}

TEST_CASE("strings and version") {
    CHECK(std::strcmp(mlein_strerror(MLEIN_OK), "success") == 0);
    CHECK(std::strlen(mlein_strerror(MLEIN_ERR_DOMAIN)) > 0);
    CHECK(std::strcmp(mlein_branch_name(MLEIN_BR_LOG_CASE), "log-case") == 0);
    CHECK(std::strlen(mlein_version()) > 0);
}
