// Python bindings: rationals cross the boundary as canonical "p/q" strings so
// exactness is preserved; structured results are plain dicts/lists.

#include "tiltwall/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace tiltwall;
using nlohmann::json;

namespace {

Rat rat_of(const std::string& s) { return parse_rational(s); }

ChernCharacter char_of(const std::vector<std::string>& parts) {
    if (parts.size() != 3 && parts.size() != 4)
        throw ParseError("character needs 3 or 4 rational strings");
    return {rat_of(parts[0]), rat_of(parts[1]), rat_of(parts[2]),
            parts.size() == 4 ? std::optional<Rat>(rat_of(parts[3])) : std::nullopt};
}

std::vector<std::string> char_out(const ChernCharacter& v) {
    std::vector<std::string> out = {to_text(v.ch0), to_text(v.ch1), to_text(v.ch2)};
    if (v.ch3) out.push_back(to_text(*v.ch3));
    return out;
}

py::object json_to_py(const json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

std::string slope_out(const SlopeValue& s) {
    if (!s.is_infinite) return to_text(s.value);
    return s.negative_sign ? "-inf" : "inf";
}

json candidate_json(const WallCandidate& c) {
    json e;
    e["sub"] = json::array({to_text(c.sub.ch0), to_text(c.sub.ch1), to_text(c.sub.ch2)});
    e["quot"] = json::array({to_text(c.quot.ch0), to_text(c.quot.ch1), to_text(c.quot.ch2)});
    e["a"] = c.a.str();
    e["b"] = c.b.str();
    e["c"] = c.c ? json(c.c->str()) : json(nullptr);
    if (c.alpha_sq) e["alpha_sq"] = to_text(*c.alpha_sq);
    if (c.alpha_window)
        e["alpha_window"] = json::array({to_text(c.alpha_window->lo), to_text(c.alpha_window->hi)});
    json tags = json::array();
    for (const Tag t : c.tags) tags.push_back(tag_name(t));
    e["classification"] = tags;
    return e;
}

} // namespace

PYBIND11_MODULE(tiltwall, m) {
    m.doc() = "Exact-rational tilt-stability wall computations on degree-d threefolds";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<UnboundedSearchError>(m, "UnboundedSearchError", PyExc_RuntimeError);

    m.def(
        "twist",
        [](const std::vector<std::string>& ch, const std::string& beta, int d) {
            return char_out(twist(char_of(ch), rat_of(beta), FanoContext::of_degree(d)));
        },
        py::arg("ch"), py::arg("beta"), py::arg("d"));

    m.def(
        "discriminant",
        [](const std::vector<std::string>& ch, int d) {
            return to_text(discriminant(char_of(ch), FanoContext::of_degree(d)));
        },
        py::arg("ch"), py::arg("d"));

    m.def(
        "satisfies_lattice",
        [](const std::vector<std::string>& ch, int d) {
            return satisfies_lattice(char_of(ch), FanoContext::of_degree(d));
        },
        py::arg("ch"), py::arg("d"));

    m.def(
        "line_bundle_character",
        [](const std::string& n, int d) {
            return char_out(line_bundle_character(rat_of(n), FanoContext::of_degree(d)));
        },
        py::arg("n"), py::arg("d"));

    m.def(
        "slope_mumford",
        [](const std::vector<std::string>& ch, int d) {
            return slope_out(slope_mumford(char_of(ch), FanoContext::of_degree(d)));
        },
        py::arg("ch"), py::arg("d"));

    m.def(
        "euler_pairing",
        [](const std::vector<std::string>& left, const std::vector<std::string>& right, int d) {
            return to_text(euler_pairing(char_of(left), char_of(right), FanoContext::of_degree(d)));
        },
        py::arg("left"), py::arg("right"), py::arg("d"));

    m.def(
        "central_charge",
        [](const std::vector<std::string>& ch, const std::string& alpha_sq,
           const std::string& beta, int d) {
            const auto z = central_charge(char_of(ch), TiltPoint::make(rat_of(alpha_sq), rat_of(beta)),
                                          FanoContext::of_degree(d));
            return std::make_pair(to_text(z.re), to_text(z.im));
        },
        py::arg("ch"), py::arg("alpha_sq"), py::arg("beta"), py::arg("d"));

    m.def(
        "tilt_slope",
        [](const std::vector<std::string>& ch, const std::string& alpha_sq,
           const std::string& beta, int d) {
            return slope_out(tilt_slope(char_of(ch), TiltPoint::make(rat_of(alpha_sq), rat_of(beta)),
                                        FanoContext::of_degree(d)));
        },
        py::arg("ch"), py::arg("alpha_sq"), py::arg("beta"), py::arg("d"));

    m.def(
        "li_check",
        [](const std::vector<std::string>& ch, int d) {
            const auto v = li_check(char_of(ch), FanoContext::of_degree(d));
            py::dict out;
            switch (v.status) {
            case BoundStatus::Pass: out["status"] = "pass"; break;
            case BoundStatus::Violate: out["status"] = "violate"; break;
            case BoundStatus::Equality: out["status"] = "equality"; break;
            case BoundStatus::NotApplicable: out["status"] = "not-applicable"; break;
            }
            out["bound"] = v.bound_value ? py::object(py::str(to_text(*v.bound_value)))
                                         : py::object(py::none());
            out["reason"] = v.reason;
            return out;
        },
        py::arg("ch"), py::arg("d"));

    m.def(
        "bms_ch3_bound",
        [](const std::vector<std::string>& ch, const std::string& alpha_sq,
           const std::string& beta, int d) {
            return to_text(bms_ch3_bound(char_of(ch), rat_of(alpha_sq), rat_of(beta),
                                         FanoContext::of_degree(d)));
        },
        py::arg("ch"), py::arg("alpha_sq"), py::arg("beta"), py::arg("d"));

    m.def(
        "enumerate_walls_on_line",
        [](const std::vector<std::string>& ch, int d, const std::string& beta,
           const std::string& alpha_sq_min, const std::string& alpha_sq_max,
           std::optional<long> rank_cap) {
            const auto e = enumerate_walls_on_line(char_of(ch), FanoContext::of_degree(d),
                                                   rat_of(beta), rat_of(alpha_sq_min),
                                                   rat_of(alpha_sq_max), rank_cap);
            json out;
            json cands = json::array();
            for (const auto& c : e.candidates) cands.push_back(candidate_json(c));
            out["candidates"] = cands;
            json surv = json::array();
            for (const auto& c : e.survivors()) surv.push_back(candidate_json(c));
            out["survivors"] = surv;
            json cert;
            cert["complete"] = e.certificate.complete;
            cert["rank_bound"] = e.certificate.rank_bound_used.str();
            cert["derivation"] =
                e.certificate.derivation == CompletenessCertificate::Derivation::DeltaInterval
                    ? "delta-interval"
                    : (e.certificate.derivation == CompletenessCertificate::Derivation::SlopeMonotone
                           ? "slope-monotone"
                           : "user-cap");
            out["certificate"] = cert;
            return json_to_py(out);
        },
        py::arg("ch"), py::arg("d"), py::arg("beta"), py::arg("alpha_sq_min") = "0",
        py::arg("alpha_sq_max") = "1/4", py::arg("rank_cap") = py::none());

    m.def(
        "enumerate_axis_destabilizers",
        [](const std::vector<std::string>& ch, const std::string& alpha_sq,
           const std::string& beta, int d) {
            const auto cases = enumerate_axis_destabilizers(
                char_of(ch), TiltPoint::make(rat_of(alpha_sq), rat_of(beta)),
                FanoContext::of_degree(d));
            json out = json::array();
            for (const auto& c : cases) {
                json e;
                e["P"] = json::array({to_text(c.chP.ch0), to_text(c.chP.ch1), to_text(c.chP.ch2)});
                e["Q"] = json::array({to_text(c.chQ.ch0), to_text(c.chQ.ch1), to_text(c.chQ.ch2)});
                json tags = json::array();
                for (const Tag t : c.tags) tags.push_back(tag_name(t));
                e["classification"] = tags;
                out.push_back(e);
            }
            return json_to_py(out);
        },
        py::arg("ch"), py::arg("alpha_sq"), py::arg("beta"), py::arg("d"));

    m.def("check_case1_diophantine", []() {
        py::list out;
        for (const auto& s : check_case1_diophantine())
            out.append(py::make_tuple(s[0].str(), s[1].str(), s[2].str()));
        return out;
    });

    m.def(
        "lemma_5_5_pairings",
        [](int n, int d) {
            const auto [a, b] = lemma_5_5_pairings(n, FanoContext::of_degree(d));
            return std::make_pair(to_text(a), to_text(b));
        },
        py::arg("n"), py::arg("d"));

    m.def(
        "verify",
        [](const std::string& scenario, int d) {
            ScenarioReport r;
            if (scenario == "prop4.1") r = verify_prop_4_1(d);
            else if (scenario == "lemma5.2") r = verify_lemma_5_2(d);
            else if (scenario == "prop5.3") r = verify_prop_5_3(d);
            else if (scenario == "prop6.5") r = verify_prop_6_5(d);
            else if (scenario == "numclass") r = verify_numerical_class(d);
            else if (scenario == "diophantine") r = verify_diophantine();
            else if (scenario == "pairings") r = verify_pairings();
            else throw ParseError("unknown scenario " + scenario);
            return json_to_py(r.to_json());
        },
        py::arg("scenario"), py::arg("d") = 0);

    m.def("verify_all", []() {
        json arr = json::array();
        for (const auto& r : verify_all()) arr.push_back(r.to_json());
        return json_to_py(arr);
    });
}
