#include "hadlab/json_io.hpp"

#include <cmath>
#include <stdexcept>

namespace hadlab {

namespace {

std::complex<double> raw_entry_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("matrix entry must be an object");
    if (j.contains("phase_turns")) {
        if (!j["phase_turns"].is_number())
            throw std::invalid_argument("phase_turns must be a number");
        const double t = j["phase_turns"].get<double>();
        const UnimodEntry e = UnimodEntry::from_turns(t);
        return e.value();
    }
    if (j.contains("re") && j.contains("im")) {
        if (!j["re"].is_number() || !j["im"].is_number())
            throw std::invalid_argument("re/im must be numbers");
        return {j["re"].get<double>(), j["im"].get<double>()};
    }
    throw std::invalid_argument("matrix entry needs re/im or phase_turns");
}

} // namespace

UnimodEntry entry_from_json(const Json& j) {
    const std::complex<double> z = raw_entry_from_json(j);
    if (std::abs(std::abs(z) - 1.0) > 1e-6)
        throw std::invalid_argument("entry modulus " + std::to_string(std::abs(z)) +
                                    " is not 1");
    return UnimodEntry::from_complex(z);
}

Json entry_to_json(const UnimodEntry& e) {
    Json j;
    j["re"] = e.re;
    j["im"] = e.im;
    return j;
}

CHMatrix matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
        !j.contains("entries"))
        throw std::invalid_argument("matrix JSON needs rows, cols, entries");
    const int rows = j["rows"].get<int>();
    const int cols = j["cols"].get<int>();
    const auto& entries = j["entries"];
    if (!entries.is_array() || static_cast<int>(entries.size()) != rows)
        throw std::invalid_argument("entries row count mismatch");
    CHMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const auto& row = entries[static_cast<size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw std::invalid_argument("entries column count mismatch");
        for (int k = 0; k < cols; ++k)
            m.at(i, k) = entry_from_json(row[static_cast<size_t>(k)]);
    }
    return m;
}

Json matrix_to_json(const CHMatrix& m) {
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int k = 0; k < m.cols(); ++k) row.push_back(entry_to_json(m.at(i, k)));
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

DenseMatrix dense_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
        !j.contains("entries"))
        throw std::invalid_argument("matrix JSON needs rows, cols, entries");
    if (j["rows"].get<int>() != 6 || j["cols"].get<int>() != 6)
        throw std::invalid_argument("basis grids must be 6x6");
    const auto& entries = j["entries"];
    if (!entries.is_array() || entries.size() != 6)
        throw std::invalid_argument("entries row count mismatch");
    DenseMatrix m;
    for (int i = 0; i < 6; ++i) {
        const auto& row = entries[static_cast<size_t>(i)];
        if (!row.is_array() || row.size() != 6)
            throw std::invalid_argument("entries column count mismatch");
        for (int k = 0; k < 6; ++k)
            m.at(i, k) = raw_entry_from_json(row[static_cast<size_t>(k)]);
    }
    return m;
}

Json move_to_json(const EquivalenceMove& mv) {
    Json j;
    j["row_perm"] = mv.row_perm;
    j["col_perm"] = mv.col_perm;
    Json rp = Json::array(), cp = Json::array();
    for (int i = 0; i < 6; ++i) {
        rp.push_back(entry_to_json(mv.row_phases[static_cast<size_t>(i)]));
        cp.push_back(entry_to_json(mv.col_phases[static_cast<size_t>(i)]));
    }
    j["row_phases"] = std::move(rp);
    j["col_phases"] = std::move(cp);
    return j;
}

Json f6t_params_to_json(const FourierTParams& p) {
    Json j;
    j["a"] = entry_to_json(p.a);
    j["b"] = entry_to_json(p.b);
    j["w_choice"] = p.w_choice == WChoice::W1 ? 1 : 2;
    return j;
}

Json x6_params_to_json(const X6Params& p) {
    Json j;
    j["beta"] = entry_to_json(p.beta);
    j["gamma"] = entry_to_json(p.gamma);
    j["epsilon"] = entry_to_json(p.epsilon);
    j["phi"] = entry_to_json(p.phi);
    return j;
}

Json report_to_json(const ClassificationReport& rep) {
    Json j;
    j["verdict"] = to_string(rep.verdict);
    if (rep.pattern_a)
        j["pattern_a_row"] = *rep.pattern_a;
    else
        j["pattern_a_row"] = nullptr;
    if (rep.pattern_b) {
        Json pb;
        pb["rows"] = rep.pattern_b->rows;
        pb["cols"] = rep.pattern_b->cols;
        j["pattern_b"] = std::move(pb);
    } else {
        j["pattern_b"] = nullptr;
    }
    j["regular"] = rep.regular;
    if (rep.dita_triangle)
        j["dita_triangle"] = *rep.dita_triangle;
    else
        j["dita_triangle"] = nullptr;
    if (rep.karlsson) {
        Json k;
        k["row_pairs"] = rep.karlsson->row_pairs;
        k["col_pairs"] = rep.karlsson->col_pairs;
        j["karlsson"] = std::move(k);
    } else {
        j["karlsson"] = nullptr;
    }
    return j;
}

Json sweep_to_json(const PivotSweep& sweep) {
    Json j;
    Json grid = Json::array();
    for (int r = 0; r < 6; ++r) {
        Json row = Json::array();
        for (int c = 0; c < 6; ++c)
            row.push_back(to_string(sweep.verdicts[static_cast<size_t>(6 * r + c)]));
        grid.push_back(std::move(row));
    }
    j["verdicts"] = std::move(grid);
    j["consistent"] = sweep.consistent;
    return j;
}

Json witness_to_json(const WitnessReport& rep) {
    Json j;
    j["holds"] = rep.holds;
    j["component_terms"] = rep.component_terms;
    j["residual_terms"] = rep.residual_terms;
    j["residual"] = rep.residual;
    return j;
}

Json mub_to_json(const MubAuditReport& rep) {
    Json j;
    Json pairs = Json::array();
    for (const PairAudit& p : rep.pairs) {
        Json pj;
        pj["bases"] = Json::array({p.first, p.second});
        pj["unbiased"] = p.unbiased;
        pj["max_deviation"] = p.max_deviation;
        if (p.transition_residual)
            pj["transition_residual"] = *p.transition_residual;
        else
            pj["transition_residual"] = nullptr;
        if (p.verdict)
            pj["verdict"] = to_string(*p.verdict);
        else
            pj["verdict"] = nullptr;
        pairs.push_back(std::move(pj));
    }
    j["pairs"] = std::move(pairs);
    j["zauner_compatible"] = rep.zauner_compatible;
    return j;
}

} // namespace hadlab
