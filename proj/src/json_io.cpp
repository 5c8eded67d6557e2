#include "pcert/json_io.hpp"

#include <sstream>

#include "json.hpp"

namespace pcert {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json dyadic_json(const Dyadic& d) {
    ordered_json j;
    j["man"] = d.man.get_str();
    j["exp"] = d.exp;
    return j;
}

ordered_json ball_json(const RealBall& b) {
    ordered_json j;
    j["mid"] = dyadic_json(b.mid);
    j["rad"] = dyadic_json(b.rad);
    j["dec"] = b.to_string(24);  // display only
    return j;
}

std::string exact_str(const Dyadic& d) { return d.to_string(); }

} // namespace

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Inside: return "inside";
        case Verdict::Violation: return "violation";
        default: return "undecided";
    }
}

std::string bound_pair_json(const BoundPair& bp, const std::optional<Int>& p_exact,
                            std::optional<Verdict> verdict) {
    ordered_json j;
    j["schema_version"] = 1;
    j["n"] = bp.n;
    j["w"] = bp.order_w;
    j["lower"] = ball_json(bp.lower);
    j["upper"] = ball_json(bp.upper);
    j["guaranteed"] = bp.threshold_ok;
    if (p_exact) j["p_exact"] = p_exact->get_str();
    if (verdict) j["verdict"] = verdict_name(*verdict);
    j["precision_bits"] = bp.precision_bits;
    return j.dump();
}

std::string bound_pair_csv_header() {
    return "n,w,lower_mid,lower_rad,upper_mid,upper_rad,guaranteed,p_exact,verdict,"
           "precision_bits";
}

std::string bound_pair_csv_row(const BoundPair& bp, const std::optional<Int>& p_exact,
                               std::optional<Verdict> verdict) {
    std::ostringstream os;
    os << bp.n << ',' << bp.order_w << ',' << exact_str(bp.lower.mid) << ','
       << exact_str(bp.lower.rad) << ',' << exact_str(bp.upper.mid) << ','
       << exact_str(bp.upper.rad) << ',' << (bp.threshold_ok ? "true" : "false") << ','
       << (p_exact ? p_exact->get_str() : "") << ','
       << (verdict ? verdict_name(*verdict) : "") << ',' << bp.precision_bits;
    return os.str();
}

std::string bound_pair_text(const BoundPair& bp, const std::optional<Int>& p_exact,
                            std::optional<Verdict> verdict) {
    std::ostringstream os;
    os << "n=" << bp.n << " w=" << bp.order_w << "\n";
    os << "  lower = " << bp.lower.to_string(24) << "\n";
    os << "  upper = " << bp.upper.to_string(24) << "\n";
    if (p_exact) os << "  p(n)  = " << p_exact->get_str() << "\n";
    os << "  guaranteed = " << (bp.threshold_ok ? "true" : "false");
    if (verdict) os << ", verdict = " << verdict_name(*verdict);
    os << ", precision_bits = " << bp.precision_bits;
    return os.str();
}

std::string report_json(const VerificationReport& rep) {
    ordered_json j;
    j["schema_version"] = 1;
    j["check_id"] = rep.check_id;
    j["parameter_range"] = rep.parameter_range;
    j["total"] = rep.total;
    j["violations"] = rep.violations;
    j["undecided"] = rep.undecided;
    j["precision_bits_max"] = rep.precision_bits_max;
    j["seed"] = rep.seed;
    j["status"] = rep.status();
    return j.dump();
}

std::string report_text(const VerificationReport& rep) {
    std::ostringstream os;
    os << rep.check_id << " [" << rep.parameter_range << "]: " << rep.status() << " ("
       << rep.total << " points";
    if (!rep.violations.empty()) os << ", " << rep.violations.size() << " violations";
    if (!rep.undecided.empty()) os << ", " << rep.undecided.size() << " undecided";
    os << ")";
    for (const auto& v : rep.violations) os << "\n  violation: " << v;
    for (const auto& u : rep.undecided) os << "\n  undecided: " << u;
    return os.str();
}

std::string coeff_json(long t, const RingElem& value,
                       const std::optional<std::string>& decimal) {
    ordered_json j;
    j["schema_version"] = 1;
    j["t"] = t;
    ordered_json terms = ordered_json::array();
    for (const auto& [k, c] : value.terms()) {
        ordered_json term;
        term["pi_exp"] = k.first;
        term["sqrt6"] = k.second;
        term["num"] = c.get_num().get_str();
        term["den"] = c.get_den().get_str();
        terms.push_back(term);
    }
    j["terms"] = terms;
    if (decimal) j["decimal"] = *decimal;
    return j.dump();
}

std::string coeff_text(long t, const RingElem& value,
                       const std::optional<std::string>& decimal) {
    std::ostringstream os;
    os << "g(" << t << ") = " << value.to_string();
    if (decimal) os << " = " << *decimal;
    return os.str();
}

} // namespace pcert
