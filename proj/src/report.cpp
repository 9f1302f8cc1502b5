#include "stocenv/report.hpp"

#include <nlohmann/json.hpp>

#include "stocenv/errors.hpp"
#include "stocenv/fock.hpp"

namespace stocenv {

using nlohmann::json;

StochasticMatrix parse_input(const json& doc) {
    if (!doc.is_object() || !doc.contains("rows"))
        throw ParseError("input document must be an object with a \"rows\" field");
    const json& rows = doc.at("rows");
    if (!rows.is_array() || rows.empty()) throw ParseError("\"rows\" must be a nonempty array");
    const std::size_t d = rows.size();
    RationalMatrix raw(d, rows.at(0).is_array() ? rows.at(0).size() : 0);
    if (raw.cols() != d) throw NotSquare("row 0 has " + std::to_string(raw.cols()) +
                                         " entries, expected " + std::to_string(d));
    for (std::size_t i = 0; i < d; ++i) {
        const json& row = rows.at(i);
        if (!row.is_array() || row.size() != d)
            throw NotSquare("row " + std::to_string(i) + " has the wrong length");
        for (std::size_t j = 0; j < d; ++j) {
            const json& cell = row.at(j);
            if (cell.is_string())
                raw.at(i, j) = parse_rational(cell.get<std::string>());
            else if (cell.is_number_integer())
                raw.at(i, j) = Rational(static_cast<long>(cell.get<long long>()));
            else
                throw ParseError("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                 ") must be a rational string or integer");
        }
    }
    std::vector<std::string> labels;
    if (doc.contains("states")) {
        if (!doc.at("states").is_array() || doc.at("states").size() != d)
            throw ParseError("\"states\" must list one label per row");
        for (const json& s : doc.at("states")) labels.push_back(s.get<std::string>());
    }
    return validate(raw, std::move(labels));
}

StochasticMatrix parse_input_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return parse_input(doc);
}

namespace {

json tool_block() { return json{{"name", kToolName}, {"version", kToolVersion}}; }

json input_block(const StochasticMatrix& p) {
    json rows = json::array();
    for (std::size_t i = 0; i < p.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < p.size(); ++j)
            row.push_back(rational_to_string(p.entries.at(i, j)));
        rows.push_back(row);
    }
    return json{{"states", p.states}, {"rows", rows}};
}

json labels_of(const StochasticMatrix& p, const std::vector<int>& states) {
    json out = json::array();
    for (int s : states) out.push_back(p.states[static_cast<std::size_t>(s)]);
    return out;
}

json group_block(const AbelianGroupPresentation& g) {
    json torsion = json::array();
    for (const Integer& t : g.torsion) torsion.push_back(t.get_str());
    json out{{"free_rank", g.free_rank}, {"torsion", torsion}};
    if (g.torsion_unit && g.free_unit) {
        json tu = json::array(), fu = json::array();
        for (const Integer& x : *g.torsion_unit) tu.push_back(x.get_str());
        for (const Integer& x : *g.free_unit) fu.push_back(x.get_str());
        out["unit_class"] = json{{"torsion", tu}, {"free", fu}};
    }
    return out;
}

json verdict_block(const StochasticMatrix& p, const StochasticMatrix& q,
                   const ClassificationVerdict& v) {
    json out{{"question", to_string(v.question)},
             {"answer", to_string(v.answer)},
             {"reason", v.reason}};
    if (v.witness) {
        json tau = json::array();
        for (auto [a, b] : *v.witness)
            tau.push_back(json{{"from", p.states[static_cast<std::size_t>(a)]},
                               {"to", q.states[static_cast<std::size_t>(b)]}});
        out["witness"] = tau;
    }
    return out;
}

json verdict_block_plain(const ClassificationVerdict& v) {
    return json{{"question", to_string(v.question)},
                {"answer", to_string(v.answer)},
                {"reason", v.reason}};
}

json boundary_block(const StochasticMatrix& p, const Dynamics& dyn, const BoundaryReport& rep) {
    json windows = json::object();
    for (std::size_t k = 0; k < p.size(); ++k)
        windows[p.states[k]] = dyn.profile.per_state[k] + dyn.decomp.period;
    return json{{"exclusive", labels_of(p, rep.exclusive)},
                {"boundary", labels_of(p, rep.boundary)},
                {"undetermined", labels_of(p, rep.undetermined)},
                {"multiple_arrival", rep.multiple_arrival},
                {"fully_supported", rep.fully_supported},
                {"verification_windows", windows}};
}

json envelope_block(const StochasticMatrix& p, const EnvelopeInvariants& inv,
                    const BoundaryReport& rep) {
    json nullities = json::object(), defects = json::object();
    for (std::size_t k = 0; k < p.size(); ++k) nullities[p.states[k]] = inv.nullities[k];
    for (auto [k, v] : inv.defects) defects[p.states[static_cast<std::size_t>(k)]] = v;
    json out{{"nullities", nullities},
             {"defects_mod_d", defects},
             {"weak_class", inv.weak_class},
             {"trichotomy", to_string(inv.trichotomy)}};
    if (inv.k_theory) {
        out["k0"] = inv.k_theory->k0_rank == 1 ? "Z"
                                               : "Z^" + std::to_string(inv.k_theory->k0_rank);
        out["k1"] = inv.k_theory->k1 == K1Tag::FreeRankOne ? "Z" : "0";
    } else {
        out["k0"] = "Indeterminate";
        out["k1"] = "Indeterminate";
    }
    (void)rep;
    return out;
}

}  // namespace

json analysis_report(const StochasticMatrix& p) {
    json out{{"tool", tool_block()}, {"input", input_block(p)}};
    if (!is_irreducible(p)) {
        out["irreducible"] = false;
        return out;
    }
    ClassificationContext ctx = classification_context(p);
    const Dynamics& dyn = ctx.dynamics;
    out["irreducible"] = true;
    out["period"] = dyn.decomp.period;
    json classes = json::array();
    for (const auto& cls : dyn.decomp.classes) classes.push_back(labels_of(p, cls));
    out["cyclic_classes"] = classes;
    out["proper_order"] = labels_of(p, dyn.decomp.proper_order);
    json stationary = json::array();
    for (const Rational& v : stationary_distribution(p)) stationary.push_back(rational_to_string(v));
    out["stationary"] = stationary;
    json per_state = json::object();
    for (std::size_t k = 0; k < p.size(); ++k) per_state[p.states[k]] = dyn.profile.per_state[k];
    out["stabilization"] = json{{"per_state", per_state}, {"global", dyn.profile.global}};
    out["boundary"] = boundary_block(p, dyn, ctx.report);
    out["envelope"] = envelope_block(p, ctx.invariants, ctx.report);

    BoolMatrix gr = support(p.entries);
    auto [k0, k1] = cuntz_krieger_k_theory(gr);
    out["cuntz_krieger"] = json{{"k0", group_block(k0)}, {"k1", group_block(k1)}};
    return out;
}

json classify_report(const StochasticMatrix& p, const StochasticMatrix& q) {
    ClassificationContext cp = classification_context(p);
    ClassificationContext cq = classification_context(q);
    json out{{"tool", tool_block()},
             {"input_p", input_block(p)},
             {"input_q", input_block(q)}};
    out["envelope"] = json{
        {"star_isomorphic", verdict_block(p, q, isomorphic_envelopes(cp, cq))},
        {"stably_isomorphic", verdict_block(p, q, stably_isomorphic_envelopes(cp, cq))}};
    GraphAlgebraComparison ga = compare_graph_algebras(support(p.entries), support(q.entries));
    out["graph_algebra"] = json{{"star_isomorphic", verdict_block_plain(ga.star)},
                                {"stably_isomorphic", verdict_block_plain(ga.stable)}};
    return out;
}

json graph_algebra_report(const StochasticMatrix& p) {
    auto [k0, k1] = cuntz_krieger_k_theory(support(p.entries));
    return json{{"tool", tool_block()},
                {"input", input_block(p)},
                {"k0", group_block(k0)},
                {"k1", group_block(k1)}};
}

json fock_report(const StochasticMatrix& p, std::vector<int> columns, unsigned long levels,
                 double tolerance, int basepoint) {
    ClassificationContext ctx = classification_context(p);
    const Dynamics& dyn = ctx.dynamics;
    if (levels == 0) levels = default_levels(dyn);
    if (columns.empty()) columns = ctx.report.boundary;

    json out{{"tool", tool_block()},
             {"input", input_block(p)},
             {"levels", levels},
             {"tolerance", tolerance},
             {"basepoint", p.states[static_cast<std::size_t>(basepoint)]}};

    json cols = json::array();
    for (int k : columns) {
        json col{{"column", p.states[static_cast<std::size_t>(k)]}};
        RelationSuiteReport rel = verify_relation_suite(dyn, k, levels);
        col["relations"] = json{{"window", json::array({rel.window_lo, rel.window_hi})},
                                {"max_in_window", rel.max_in_window},
                                {"max_below_window", rel.max_below_window},
                                {"pass", rel.max_in_window < tolerance}};
        FredholmIndexReport idx = fredholm_index_V(dyn, k, basepoint, levels);
        col["fredholm_index"] = json{{"index", idx.index},
                                     {"analytic_kernel", idx.analytic_kernel},
                                     {"analytic_cokernel", idx.analytic_cokernel},
                                     {"numeric_kernel", idx.numeric_kernel},
                                     {"numeric_cokernel", idx.numeric_cokernel},
                                     {"numeric_agrees", idx.numeric_agrees}};
        if (ctx.report.is_boundary(k)) {
            unsigned long dc = verify_defect_cokernel(dyn, ctx.report, k, levels);
            unsigned long ed = extension_defect(dyn, ctx.report, k);
            col["defect"] = json{{"cokernel_mod_d", dc},
                                 {"extension_defect", ed},
                                 {"agrees", dc == ed}};
        }
        cols.push_back(col);
    }
    out["columns"] = cols;

    EventuallyProjectionReport ep = verify_eventually_projection(dyn, 0.1);
    out["eventually_projection"] = json{{"eps", 0.1},
                                        {"m", ep.m},
                                        {"max_ratio", rational_to_string(ep.max_ratio)},
                                        {"m_bound", ep.m_bound},
                                        {"min_eigenvalue", ep.min_eigenvalue},
                                        {"pass", ep.min_eigenvalue >= -1e-9}};
    return out;
}

namespace {

bool contains_indeterminate(const json& node) {
    if (node.is_string()) return node.get<std::string>() == "Indeterminate";
    if (node.is_object() || node.is_array())
        for (const auto& child : node)
            if (contains_indeterminate(child)) return true;
    return false;
}

}  // namespace

bool report_has_indeterminate(const json& report) { return contains_indeterminate(report); }

}  // namespace stocenv
