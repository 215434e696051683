#include "doctest.h"

#include "dpb/cli_io.hpp"

using namespace dpb;

namespace {

const char* kks_twisted_spec = R"(# standard bracket, sign-flip involution
[bracket]
family = kks
L = 1

[involution]
kind = phi_minus

[form]
kind = identity
d = 3

[checks]
check = jacobi
check = adapted
check = well_defined
check = ring_jacobi
check = equivariance
max_word_len = 3
samples = 10
seed = 7
exhaustive = true
)";

} // namespace

TEST_CASE("spec parsing and canonical round trip") {
    JobSpec job = parse_spec(kks_twisted_spec);
    CHECK(job.family == "kks");
    CHECK(job.L == 1);
    CHECK(job.involution == "phi_minus");
    CHECK(job.form == "identity");
    CHECK(job.d == 3);
    CHECK(job.checks == std::vector<std::string>{"jacobi", "adapted",
                                                 "well_defined", "ring_jacobi",
                                                 "equivariance"});
    CHECK(job.seed == 7);
    CHECK(job.exhaustive);

    std::string canonical = serialize_spec(job);
    CHECK(parse_spec(canonical) == job);
    CHECK(serialize_spec(parse_spec(canonical)) == canonical);
}

TEST_CASE("parse errors carry position information") {
    CHECK_THROWS_AS(parse_spec("[nowhere]\n"), ParseError);
    CHECK_THROWS_AS(parse_spec("family = kks\n"), ParseError); // no section
    CHECK_THROWS_AS(parse_spec("[bracket]\nfamily kks\n"), ParseError);
    CHECK_THROWS_AS(parse_spec("[bracket]\ncolour = red\n"), ParseError);

    try {
        parse_spec("[bracket]\nfamily = ors\nL = 2\nlambda = [0, 1/0]\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 4);
        CHECK(e.col > 1);
        CHECK(std::string(e.what()).find("rational") != std::string::npos);
    }

    try {
        parse_spec("[checks]\nexhaustive = maybe\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("validation errors carry the field path") {
    // wrong arity for the r tensor (needs L^4 = 16 entries)
    try {
        parse_spec("[bracket]\nfamily = quadratic\nL = 2\nr = [1, -1]\n");
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.field == "bracket.r");
    }

    CHECK_THROWS_AS(parse_spec("[bracket]\nfamily = mystery\nL = 1\n"),
                    ValidationError);
    CHECK_THROWS_AS(
        parse_spec("[bracket]\nfamily = kks\nL = 2\n[involution]\nkind = "
                   "signed_perm\npi = [2, 1]\n"),
        ValidationError);
    CHECK_THROWS_AS(parse_spec("[bracket]\nfamily = kks\nL = 1\n[form]\nkind "
                               "= theta_symplectic\nN = 3\n"),
                    ValidationError);
    CHECK_THROWS_AS(parse_spec("[bracket]\nfamily = ors\nL = 2\nlambda = [2, "
                               "2]\n"),
                    ValidationError);
    CHECK_THROWS_AS(parse_spec("[bracket]\nfamily = kks\nL = 1\n[checks]\n"
                               "check = levitate\n"),
                    ValidationError);
}

TEST_CASE("run_job executes checks in order and reports deterministically") {
    JobSpec job = parse_spec(kks_twisted_spec);
    Report rep = run_job(job);
    REQUIRE(rep.checks.size() == 5);
    CHECK(rep.all_passed());
    CHECK(rep.checks[0].name == "jacobi");
    CHECK(rep.checks[3].name == "ring_jacobi");
    CHECK(rep.job_echo == serialize_spec(job));

    // byte-identical reports for identical (spec, seed)
    Report rep2 = run_job(job);
    CHECK(report_json(rep).dump(2) == report_json(rep2).dump(2));
    // millis only with timings enabled
    CHECK(report_json(rep).dump().find("millis") == std::string::npos);
    CHECK(report_json(rep, true).dump().find("millis") != std::string::npos);
}

TEST_CASE("failed adaptedness surfaces as a counterexample, not an abort") {
    JobSpec job = parse_spec("[bracket]\nfamily = kks\nL = 2\n[involution]\n"
                             "kind = phi_plus\n[checks]\ncheck = adapted\n");
    Report rep = run_job(job);
    REQUIRE(rep.checks.size() == 1);
    CHECK_FALSE(rep.all_passed());
    REQUIRE(rep.checks[0].report.counterexample.has_value());
    CHECK_FALSE(rep.checks[0].report.counterexample->lhs.empty());
}

TEST_CASE("structure export lists relations and free variables") {
    JobSpec job = parse_spec("[bracket]\nfamily = kks\nL = 1\n[involution]\n"
                             "kind = phi_minus\n[form]\nkind = identity\n"
                             "d = 2\n[checks]\ncheck = ring_jacobi\n"
                             "exhaustive = true\n");
    Report rep = run_job(job, 1, true);
    CHECK(rep.all_passed());
    REQUIRE_FALSE(rep.structure.is_null());
    CHECK(rep.structure["mode"] == "twisted");
    // antisymmetric 2x2 matrices: one free variable
    CHECK(rep.structure["free_vars"].size() == 1);
    CHECK(rep.structure["relations"].size() >= 3);

    JobSpec plain = parse_spec("[bracket]\nfamily = kks\nL = 1\n[form]\nkind "
                               "= identity\nd = 2\n[checks]\ncheck = "
                               "ring_jacobi\nexhaustive = true\n");
    Report prep = run_job(plain, 1, true);
    CHECK(prep.all_passed());
    CHECK(prep.structure["mode"] == "plain");
    CHECK_FALSE(prep.structure.contains("relations"));
}

TEST_CASE("r-level and centralizer jobs from spec text") {
    JobSpec aybe = parse_spec("[bracket]\nfamily = ors\nL = 2\nlambda = [0, "
                              "1]\n[checks]\ncheck = r_skew\ncheck = aybe\n");
    CHECK(run_job(aybe).all_passed());

    JobSpec cent = parse_spec("[bracket]\nfamily = kks\nL = 2\n[form]\nkind = "
                              "theta_orthogonal\nN = 3\n[checks]\ncheck = "
                              "centralizer\nmax_word_len = 1\n");
    Report rep = run_job(cent);
    CHECK(rep.all_passed());
    CHECK(rep.checks[0].report.scope.find("orthogonal") != std::string::npos);

    // a check that needs a missing section aborts that record only
    JobSpec bad = parse_spec("[bracket]\nfamily = kks\nL = 2\n[checks]\n"
                             "check = adapted\ncheck = jacobi\n");
    Report brep = run_job(bad);
    CHECK_FALSE(brep.checks[0].report.passed);
    CHECK(brep.checks[1].report.passed);
}
