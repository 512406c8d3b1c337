// scatdet: evaluate explicit automorphic scattering determinants, verify the
// central-value sign identity, and print divisor/multiplicity/superzeta
// reports in human, JSON, and CSV form.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "scatdet/divisor.hpp"
#include "scatdet/json_io.hpp"
#include "scatdet/scattering.hpp"
#include "scatdet/specfun.hpp"
#include "scatdet/superzeta.hpp"
#include "scatdet/surface.hpp"

namespace {

using namespace scatdet;

constexpr const char* kVersion = "0.1.0";

// ---------------------------------------------------------------------------
// Deterministic JSON emission: fixed field order, floats always %.12e.
// ---------------------------------------------------------------------------

std::string jnum(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12e", v);
    return buf;
}

std::string jint(long long v) { return std::to_string(v); }

std::string jstr(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    out += "\"";
    return out;
}

std::string jbool(bool b) { return b ? "true" : "false"; }

std::string jcomplex(Complex v) { return "[" + jnum(v.real()) + "," + jnum(v.imag()) + "]"; }

std::string envelope(const std::string& command, const std::string& inputEcho,
                     const std::string& result, const std::string& toleranceProfile) {
    return "{\"command\":" + jstr(command) + ",\"input_echo\":" + inputEcho +
           ",\"result\":" + result + ",\"tolerance_profile\":" + jstr(toleranceProfile) +
           ",\"version\":" + jstr(kVersion) + "}";
}

std::string familyEcho(const scattering::ScatteringFamily& fam) {
    std::string kind;
    switch (fam.kind()) {
        case scattering::FamilyKind::Modular: kind = "modular"; break;
        case scattering::FamilyKind::Gamma0Squarefree: kind = "gamma0"; break;
        case scattering::FamilyKind::Gamma0Plus: kind = "gamma0plus"; break;
    }
    std::string primes = "[";
    for (size_t i = 0; i < fam.primes().size(); ++i) {
        if (i) primes += ",";
        primes += jint(fam.primes()[i]);
    }
    primes += "]";
    return "{\"family\":" + jstr(kind) + ",\"primes\":" + primes + "}";
}

// ---------------------------------------------------------------------------
// Argument helpers
// ---------------------------------------------------------------------------

Complex parseComplexArg(const std::string& text) {
    std::istringstream in(text);
    double re = 0.0, im = 0.0;
    char comma = 0;
    if (!(in >> re)) throw DomainError("cannot parse complex value '" + text + "'");
    if (in >> comma) {
        if (comma != ',' || !(in >> im))
            throw DomainError("cannot parse complex value '" + text + "'");
    }
    std::string rest;
    if (in >> rest) throw DomainError("trailing characters in complex value '" + text + "'");
    return Complex(re, im);
}

scattering::ScatteringFamily buildFamily(const std::string& name,
                                         const std::vector<long long>& primes) {
    if (name == "modular") {
        if (!primes.empty()) throw DomainError("--family modular takes no --primes");
        return scattering::ScatteringFamily::modular();
    }
    if (name == "gamma0") return scattering::ScatteringFamily::gamma0(primes);
    if (name == "gamma0plus") return scattering::ScatteringFamily::gamma0plus(primes);
    throw DomainError("unknown family '" + name + "' (expected modular|gamma0|gamma0plus)");
}

// Literal JSON string, or @path to read it from a file.
nlohmann::json loadJsonArg(const std::string& arg) {
    std::string text = arg;
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw DomainError("cannot open file '" + arg.substr(1) + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed JSON: ") + e.what());
    }
}

std::vector<scattering::ScatteringFamily> acceptanceFamilies() {
    using scattering::ScatteringFamily;
    return {
        ScatteringFamily::modular(),          ScatteringFamily::gamma0({2}),
        ScatteringFamily::gamma0({3}),        ScatteringFamily::gamma0({5}),
        ScatteringFamily::gamma0({2, 3}),     ScatteringFamily::gamma0({2, 3, 5}),
        ScatteringFamily::gamma0plus({}),     ScatteringFamily::gamma0plus({2}),
        ScatteringFamily::gamma0plus({2, 3}), ScatteringFamily::gamma0plus({2, 3, 5}),
    };
}

// ---------------------------------------------------------------------------
// Subcommand: phi-eval
// ---------------------------------------------------------------------------

int runPhiEval(const scattering::ScatteringFamily& fam, const std::string& sArg, bool germ,
               bool json) {
    const Complex s = parseComplexArg(sArg);
    const std::string echo = "{\"family\":" + familyEcho(fam) + ",\"s\":" + jcomplex(s) +
                             ",\"germ\":" + jbool(germ) + "}";
    if (germ) {
        if (s.imag() != 0.0) throw DomainError("--germ requires a real evaluation point");
        const LaurentGerm g = scattering::germAt(fam, s.real());
        if (json) {
            std::string co = "[";
            for (int i = 0; i <= g.depth(); ++i) {
                if (i) co += ",";
                co += jnum(g.coeffs[i]);
            }
            co += "]";
            const std::string result = "{\"point\":" + jnum(g.point) +
                                       ",\"order\":" + jint(g.order) +
                                       ",\"coefficients\":" + co + "}";
            std::cout << envelope("phi-eval", echo, result, "germ-depth=6") << "\n";
        } else {
            std::cout << "Laurent germ of phi at s = " << g.point << ": order " << g.order
                      << ", value " << jnum(g.leading()) << "\n";
            std::cout << "coefficients:";
            for (int i = 0; i <= g.depth(); ++i) std::cout << " " << jnum(g.coeffs[i]);
            std::cout << "\n";
        }
        return 0;
    }
    Complex v;
    try {
        v = scattering::phiEval(fam, s);
    } catch (const SingularityError& e) {
        std::cerr << "error: " << e.what() << " (rerun with --germ)\n";
        return 3;
    }
    if (json) {
        const std::string result = "{\"value\":" + jcomplex(v) + "}";
        std::cout << envelope("phi-eval", echo, result, "phi-accuracy=1e-9") << "\n";
    } else {
        std::cout << "phi(" << sArg << ") = " << jnum(v.real());
        if (s.imag() != 0.0 || v.imag() != 0.0) std::cout << " + " << jnum(v.imag()) << "i";
        std::cout << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// Subcommand: verify
// ---------------------------------------------------------------------------

struct VerifyRow {
    std::string label;
    divisor::TheoremReport rep;
    divisor::DivisorCount dc;
    scattering::CentralValueReport cv;
};

std::string divisorJson(const divisor::DivisorCount& dc) {
    std::string out = "{\"zeros\":" + jint(dc.zeros) + ",\"poles\":" + jint(dc.poles) +
                      ",\"breakdown\":[";
    for (size_t i = 0; i < dc.breakdown.size(); ++i) {
        const auto& e = dc.breakdown[i];
        if (i) out += ",";
        out += "{\"location\":" + jnum(e.location) + ",\"order\":" + jint(e.order) +
               ",\"source\":" + jstr(e.source) + "}";
    }
    out += "],\"justifications\":[";
    for (size_t i = 0; i < dc.justifications.size(); ++i) {
        if (i) out += ",";
        out += jstr(dc.justifications[i]);
    }
    return out + "]}";
}

int runVerify(const std::vector<scattering::ScatteringFamily>& fams, bool all, bool json,
              bool ledger) {
    std::vector<VerifyRow> rows;
    bool allMatch = true;
    for (const auto& fam : fams) {
        VerifyRow row;
        row.label = fam.label();
        row.rep = divisor::verifyTheorem(fam);
        row.dc = divisor::countDivisor(fam);
        row.cv = scattering::centralValue(fam);
        allMatch = allMatch && row.rep.ok && row.cv.matches;
        rows.push_back(std::move(row));
    }
    if (json) {
        std::string echo = all ? std::string("{\"all\":true}")
                               : "{\"family\":" + familyEcho(fams[0]) + "}";
        std::string rjson = "{\"rows\":[";
        for (size_t i = 0; i < rows.size(); ++i) {
            const auto& r = rows[i];
            if (i) rjson += ",";
            rjson += "{\"family\":" + jstr(r.label) + ",\"zeros\":" + jint(r.rep.zeros) +
                     ",\"poles\":" + jint(r.rep.poles) + ",\"sgn_d1\":" + jint(r.rep.sgnD1) +
                     ",\"predicted\":" + jint(r.rep.predicted) +
                     ",\"germ_value\":" + jnum(r.cv.germValue) +
                     ",\"extrapolated_value\":" + jnum(r.cv.extrapolatedValue) +
                     ",\"divisor\":" + divisorJson(r.dc) +
                     ",\"match\":" + jbool(r.rep.ok && r.cv.matches) + "}";
        }
        rjson += "],\"all_match\":" + jbool(allMatch) + "}";
        std::cout << envelope("verify", echo, rjson, "germ=1e-6;extrapolation=1e-4") << "\n";
    } else {
        std::printf("%-22s %3s %3s %7s %10s %18s %18s %6s\n", "family", "N", "P", "sgn d1",
                    "predicted", "germ value", "extrapolated", "match");
        for (const auto& r : rows) {
            std::printf("%-22s %3d %3d %7d %10d %18.10f %18.10f %6s\n", r.label.c_str(),
                        r.rep.zeros, r.rep.poles, r.rep.sgnD1, r.rep.predicted, r.cv.germValue,
                        r.cv.extrapolatedValue, (r.rep.ok && r.cv.matches) ? "yes" : "NO");
            if (ledger) {
                for (const auto& e : r.dc.breakdown)
                    std::printf("    s = %-6g order %+d  %s\n", e.location, e.order,
                                e.source.c_str());
                for (const auto& just : r.dc.justifications)
                    std::printf("    note: %s\n", just.c_str());
            }
        }
    }
    return allMatch ? 0 : 1;
}

// ---------------------------------------------------------------------------
// Subcommand: multiplicities
// ---------------------------------------------------------------------------

int runMultiplicities(const surface::GroupDescriptor& desc, int nMax, bool json) {
    bool allAgree = true;
    std::vector<surface::MultiplicityReport> rows;
    rows.reserve(nMax + 1);
    for (int n = 0; n <= nMax; ++n) {
        rows.push_back(surface::multiplicityReport(desc, n));
        allAgree = allAgree && rows.back().agree;
    }
    if (json) {
        const std::string echo =
            "{\"descriptor\":" + descriptorToJson(desc).dump() + ",\"n_max\":" + jint(nMax) + "}";
        std::string rjson = "{\"rows\":[";
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i) rjson += ",";
            rjson += "{\"n\":" + jint(rows[i].n) + ",\"floor\":" + jint(rows[i].floorFormula) +
                     ",\"sine\":" + jnum(rows[i].sineFormula) +
                     ",\"agree\":" + jbool(rows[i].agree) + "}";
        }
        rjson += "],\"all_agree\":" + jbool(allAgree) + "}";
        std::cout << envelope("multiplicities", echo, rjson, "sine-floor=1e-8") << "\n";
    } else {
        std::cout << "n,floor,sine,agree\n";
        for (const auto& r : rows)
            std::cout << r.n << "," << r.floorFormula << "," << jnum(r.sineFormula) << ","
                      << (r.agree ? "true" : "false") << "\n";
    }
    return allAgree ? 0 : 1;
}

// ---------------------------------------------------------------------------
// Subcommand: superzeta-demo
// ---------------------------------------------------------------------------

int runSuperzetaDemo(const superzeta::ZeroSet& zs, const std::string& zArg, bool json) {
    const Complex z = parseComplexArg(zArg);
    const std::vector<Complex> sSamples = {Complex(3.0, 0.0), Complex(4.0, 0.0)};
    std::vector<superzeta::SuperzetaSum> sums;
    for (Complex s : sSamples) sums.push_back(superzeta::superzetaSum(zs, s, z, 2000));
    const Complex det = superzeta::regularizedDet(zs, z);

    std::optional<Complex> direct;
    bool crossCheck = true;
    if (zs.kind() == superzeta::ZeroSet::Kind::Finite) {
        Complex prod = 1.0;
        for (const auto& e : zs.zeros()) prod *= std::pow(z - e.zero, double(e.multiplicity));
        direct = prod;
        crossCheck = std::abs(det - prod) <= 1e-12 * std::max(1.0, std::abs(prod));
    }

    if (json) {
        const std::string echo =
            "{\"zeros\":" + zeroSetToJson(zs).dump() + ",\"z\":" + jcomplex(z) + "}";
        std::string rjson = "{\"sums\":[";
        for (size_t i = 0; i < sums.size(); ++i) {
            if (i) rjson += ",";
            rjson += "{\"s\":" + jcomplex(sSamples[i]) + ",\"value\":" + jcomplex(sums[i].value) +
                     ",\"tail_estimate\":" + jnum(sums[i].tailEstimate) + "}";
        }
        rjson += "],\"determinant\":" + jcomplex(det);
        rjson += ",\"direct_product\":";
        rjson += direct ? jcomplex(*direct) : std::string("null");
        rjson += ",\"cross_check\":";
        rjson += direct ? jbool(crossCheck) : std::string("null");
        rjson += "}";
        std::cout << envelope("superzeta-demo", echo, rjson, "finite-product=1e-12;lerch=1e-8")
                  << "\n";
    } else {
        for (size_t i = 0; i < sums.size(); ++i) {
            std::cout << "superzeta sum at s = " << sSamples[i].real() << ": "
                      << jnum(sums[i].value.real()) << " + " << jnum(sums[i].value.imag())
                      << "i";
            if (sums[i].tailEstimate > 0.0)
                std::cout << " (tail estimate " << jnum(sums[i].tailEstimate) << ")";
            std::cout << "\n";
        }
        std::cout << "regularized determinant: " << jnum(det.real()) << " + "
                  << jnum(det.imag()) << "i\n";
        if (direct) {
            std::cout << "direct product: " << jnum(direct->real()) << " + "
                      << jnum(direct->imag()) << "i  cross-check: "
                      << (crossCheck ? "pass" : "FAIL") << "\n";
        }
    }
    return (direct && !crossCheck) ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"scattering determinant central-value verification toolkit"};
    app.require_subcommand(1);

    // phi-eval
    auto* phiCmd = app.add_subcommand("phi-eval", "evaluate phi(s) or its Laurent germ");
    std::string phiFamily, phiS = "2";
    std::vector<long long> phiPrimes;
    bool phiGerm = false, phiJson = false;
    phiCmd->add_option("--family", phiFamily, "modular|gamma0|gamma0plus")->required();
    phiCmd->add_option("--primes", phiPrimes, "distinct primes (comma separated)")
        ->delimiter(',');
    phiCmd->add_option("--s", phiS, "evaluation point: re[,im]")->required();
    phiCmd->add_flag("--germ", phiGerm, "emit the Laurent germ at a real point");
    phiCmd->add_flag("--json", phiJson, "JSON report");

    // verify
    auto* verifyCmd = app.add_subcommand("verify", "check phi(1/2) = (-1)^(N+P) sgn d(1)");
    std::string verFamily;
    std::vector<long long> verPrimes;
    bool verAll = false, verJson = false, verLedger = false;
    verifyCmd->add_option("--family", verFamily, "modular|gamma0|gamma0plus");
    verifyCmd->add_option("--primes", verPrimes, "distinct primes")->delimiter(',');
    verifyCmd->add_flag("--all", verAll, "run the full acceptance family list");
    verifyCmd->add_flag("--ledger", verLedger, "print the per-factor divisor breakdown");
    verifyCmd->add_flag("--json", verJson, "JSON report");

    // multiplicities
    auto* multCmd = app.add_subcommand("multiplicities",
                                       "tabulate divisor orders at negative integers");
    std::string multDescriptor;
    int multGenus = 0, multCusps = 1, multNMax = 200;
    std::vector<int> multOrders;
    bool multJson = false;
    multCmd->add_option("--descriptor", multDescriptor, "descriptor JSON (literal or @file)");
    multCmd->add_option("--genus", multGenus, "genus");
    multCmd->add_option("--cusps", multCusps, "number of cusps");
    multCmd->add_option("--orders", multOrders, "elliptic orders")->delimiter(',');
    multCmd->add_option("--n-max", multNMax, "largest n (<= 10000)");
    multCmd->add_flag("--json", multJson, "JSON report");

    // superzeta-demo
    auto* szCmd = app.add_subcommand("superzeta-demo",
                                     "superzeta sums and the regularized product");
    std::string szZeros, szZ = "3";
    bool szJson = false;
    szCmd->add_option("--zeros", szZeros, "zero-set JSON (literal or @file)")->required();
    szCmd->add_option("--z", szZ, "evaluation point: re[,im]")->required();
    szCmd->add_flag("--json", szJson, "JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (phiCmd->parsed()) {
            return runPhiEval(buildFamily(phiFamily, phiPrimes), phiS, phiGerm, phiJson);
        }
        if (verifyCmd->parsed()) {
            if (verAll) return runVerify(acceptanceFamilies(), true, verJson, verLedger);
            if (verFamily.empty()) {
                std::cerr << "error: verify needs --family or --all\n";
                return 2;
            }
            return runVerify({buildFamily(verFamily, verPrimes)}, false, verJson, verLedger);
        }
        if (multCmd->parsed()) {
            if (multNMax < 0 || multNMax > 10000) {
                std::cerr << "error: --n-max must be in [0, 10000]\n";
                return 2;
            }
            const surface::GroupDescriptor desc =
                multDescriptor.empty()
                    ? surface::GroupDescriptor(multGenus, multCusps, multOrders)
                    : descriptorFromJson(loadJsonArg(multDescriptor));
            return runMultiplicities(desc, multNMax, multJson);
        }
        if (szCmd->parsed()) {
            return runSuperzetaDemo(zeroSetFromJson(loadJsonArg(szZeros)), szZ, szJson);
        }
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const MathError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
