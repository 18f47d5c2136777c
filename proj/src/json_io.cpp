#include "omega/json_io.hpp"

namespace omega {

Json rat_json(const Rat& v) { return rat_str(v); }

Rat rat_from_json(const Json& j) {
    if (!j.is_string()) throw DataError("expected a \"num/den\" string");
    return rat_parse(j.get<std::string>());
}

Json quad_json(const Quad& v) {
    return Json{{"a", rat_json(v.a)}, {"b", rat_json(v.b)}, {"d", rat_json(v.d)}};
}

Quad quad_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("a") || !j.contains("b") || !j.contains("d"))
        throw DataError("expected {\"a\",\"b\",\"d\"}");
    return Quad(rat_from_json(j.at("a")), rat_from_json(j.at("b")), rat_from_json(j.at("d")));
}

Json pt_json(const PtR& p) {
    return Json::array({rat_json(p.x), rat_json(p.y), rat_json(p.z)});
}

PtR pt_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 3) throw DataError("expected a 3-element point array");
    PtR p{rat_from_json(j[0]), rat_from_json(j[1]), rat_from_json(j[2])};
    if (is_zero(p)) throw DataError("point has all-zero coordinates");
    return p;
}

Json ptq_json(const PtQ& p) {
    return Json::array({quad_json(p.x), quad_json(p.y), quad_json(p.z)});
}

Json line_json(const LnR& l) {
    return Json::array({rat_json(l.l), rat_json(l.m), rat_json(l.n)});
}

Json metric_json(const Metric& m) {
    return Json{{"a2", rat_json(m.a2)}, {"b2", rat_json(m.b2)}, {"c2", rat_json(m.c2)}};
}

Metric metric_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("a2") || !j.contains("b2") || !j.contains("c2"))
        throw DataError("expected {\"a2\",\"b2\",\"c2\"}");
    return Metric::from_squares(rat_from_json(j.at("a2")), rat_from_json(j.at("b2")),
                                rat_from_json(j.at("c2")));
}

Json circle_json(const Circle& c) {
    return Json{{"p", rat_json(c.p)}, {"q", rat_json(c.q)}, {"r", rat_json(c.r)}};
}

Circle circle_from_json(const Json& j, const Metric& m) {
    if (!j.is_object() || !j.contains("p") || !j.contains("q") || !j.contains("r"))
        throw DataError("expected {\"p\",\"q\",\"r\"}");
    return Circle{m, rat_from_json(j.at("p")), rat_from_json(j.at("q")),
                  rat_from_json(j.at("r"))};
}

Json figure_json(const Figure& fig) {
    Json j;
    j["metric"] = metric_json(fig.M);
    j["pivot_kind"] = pivot_name(fig.kind);
    j["pivot"] = pt_json(fig.pivot);
    j["gamma"] = circle_json(fig.gamma);
    j["X"] = pt_json(fig.X);
    j["Y"] = pt_json(fig.Y);
    j["Z"] = pt_json(fig.Z);
    j["circle_bc"] = circle_json(fig.cBC);
    j["circle_ca"] = circle_json(fig.cCA);
    j["circle_ab"] = circle_json(fig.cAB);
    j["U"] = pt_json(fig.U);
    j["V"] = pt_json(fig.V);
    j["W"] = pt_json(fig.W);
    j["P"] = pt_json(fig.P);
    j["axis"] = line_json(fig.axis);
    j["axis_meets"] = Json::array({pt_json(fig.axis_mA), pt_json(fig.axis_mB), pt_json(fig.axis_mC)});
    j["S"] = pt_json(fig.S);
    j["s_circumcircle_residue"] = rat_json(fig.s_circum_residue);
    if (fig.mn)
        j["mn"] = Json{{"m", rat_json(fig.mn->first)}, {"n", rat_json(fig.mn->second)}};
    else
        j["mn"] = nullptr;
    j["tangency"] = fig.tangency;
    return j;
}

Figure figure_from_json(const Json& j) {
    try {
        Figure fig;
        fig.M = metric_from_json(j.at("metric"));
        fig.kind = pivot_from_name(j.at("pivot_kind").get<std::string>());
        fig.pivot = pt_from_json(j.at("pivot"));
        fig.gamma = circle_from_json(j.at("gamma"), fig.M);
        fig.X = pt_from_json(j.at("X"));
        fig.Y = pt_from_json(j.at("Y"));
        fig.Z = pt_from_json(j.at("Z"));
        fig.cBC = circle_from_json(j.at("circle_bc"), fig.M);
        fig.cCA = circle_from_json(j.at("circle_ca"), fig.M);
        fig.cAB = circle_from_json(j.at("circle_ab"), fig.M);
        fig.U = pt_from_json(j.at("U"));
        fig.V = pt_from_json(j.at("V"));
        fig.W = pt_from_json(j.at("W"));
        fig.P = pt_from_json(j.at("P"));
        const Json& ax = j.at("axis");
        if (!ax.is_array() || ax.size() != 3) throw DataError("bad axis");
        fig.axis = LnR{rat_from_json(ax[0]), rat_from_json(ax[1]), rat_from_json(ax[2])};
        const Json& meets = j.at("axis_meets");
        if (!meets.is_array() || meets.size() != 3) throw DataError("bad axis_meets");
        fig.axis_mA = pt_from_json(meets[0]);
        fig.axis_mB = pt_from_json(meets[1]);
        fig.axis_mC = pt_from_json(meets[2]);
        fig.S = pt_from_json(j.at("S"));
        fig.s_circum_residue = rat_from_json(j.at("s_circumcircle_residue"));
        if (j.contains("mn") && !j.at("mn").is_null())
            fig.mn = {rat_from_json(j.at("mn").at("m")), rat_from_json(j.at("mn").at("n"))};
        fig.tangency = j.value("tangency", false);

        // enough consistency to trust the coordinates for rendering
        if (!on_circle(fig.gamma, fig.pivot) || !on_circle(fig.gamma, fig.X) ||
            !on_circle(fig.gamma, fig.Y) || !on_circle(fig.gamma, fig.Z) ||
            !on_circle(fig.gamma, fig.U) || !on_circle(fig.gamma, fig.V) ||
            !on_circle(fig.gamma, fig.W))
            throw DataError("figure incidences do not hold");
        return fig;
    } catch (const Json::exception& e) {
        throw DataError(std::string("malformed figure JSON: ") + e.what());
    }
}

Json ledger_json(const std::vector<LedgerEntry>& entries) {
    Json arr = Json::array();
    for (const auto& e : entries) {
        Json row;
        row["id"] = e.id;
        row["status"] = ledger_status_name(e.status);
        row["residual"] = e.residual;
        row["note"] = e.note;
        arr.push_back(std::move(row));
    }
    return arr;
}

Json parse_json(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw DataError("malformed JSON input");
    return j;
}

} // namespace omega
