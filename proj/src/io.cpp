#include "focklat/io.hpp"

#include <fstream>

#include "focklat/errors.hpp"

namespace focklat {

Json to_json(const Partition& p)
{
    return Json(p.parts());
}

Partition partition_from_json(const Json& j)
{
    if (!j.is_array())
        throw input_error("partition must be an array of positive integers");
    std::vector<long> parts;
    for (const auto& e : j) {
        if (!e.is_number_integer())
            throw input_error("partition parts must be integers");
        parts.push_back(e.get<long>());
    }
    try {
        return Partition(parts);
    } catch (const std::invalid_argument& ex) {
        throw input_error(ex.what());
    }
}

Json to_json(const MultiPartition& mp)
{
    Json j = Json::array();
    for (const Partition& p : mp.slots())
        j.push_back(to_json(p));
    return j;
}

MultiPartition multipartition_from_json(const Json& j)
{
    if (!j.is_array())
        throw input_error("multipartition must be an array of partitions");
    std::vector<Partition> slots;
    for (const auto& e : j)
        slots.push_back(partition_from_json(e));
    return MultiPartition(std::move(slots));
}

namespace {

std::string basis_name(SymBasis b)
{
    switch (b) {
    case SymBasis::P:
        return "P";
    case SymBasis::M:
        return "M";
    case SymBasis::F:
        return "F";
    }
    throw internal_error("basis_name: bad basis");
}

SymBasis basis_from_name(const std::string& s)
{
    if (s == "P")
        return SymBasis::P;
    if (s == "M")
        return SymBasis::M;
    if (s == "F")
        return SymBasis::F;
    throw input_error("unknown symmetric-function basis '" + s + "'");
}

} // namespace

Json to_json(const SymFunc& f)
{
    Json terms = Json::array();
    for (const auto& [lambda, c] : f.coeffs())
        terms.push_back(Json::array({to_json(lambda), rational_to_string(c)}));
    return Json{{"degree", f.degree()}, {"basis", basis_name(f.basis())}, {"terms", terms}};
}

SymFunc symfunc_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("degree") || !j.contains("basis") ||
        !j.contains("terms"))
        throw input_error("symmetric function needs degree, basis and terms");
    SymFunc f(j.at("degree").get<long>(), basis_from_name(j.at("basis").get<std::string>()));
    for (const auto& t : j.at("terms")) {
        if (!t.is_array() || t.size() != 2)
            throw input_error("symmetric-function term must be [partition, rational]");
        f.add_term(partition_from_json(t[0]), rational_from_string(t[1].get<std::string>()));
    }
    return f;
}

Json to_json(const ExactMatrix& m)
{
    Json rows = Json::array();
    for (long i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (long j = 0; j < m.cols(); ++j)
            row.push_back(rational_to_string(m.at(i, j)));
        rows.push_back(row);
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

ExactMatrix matrix_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
        !j.contains("entries"))
        throw input_error("matrix needs rows, cols and entries");
    long rows = j.at("rows").get<long>();
    long cols = j.at("cols").get<long>();
    const Json& entries = j.at("entries");
    if (static_cast<long>(entries.size()) != rows)
        throw input_error("matrix row count mismatch");
    ExactMatrix m(rows, cols);
    for (long i = 0; i < rows; ++i) {
        const Json& row = entries[static_cast<size_t>(i)];
        if (static_cast<long>(row.size()) != cols)
            throw input_error("matrix column count mismatch");
        for (long c = 0; c < cols; ++c) {
            const Json& e = row[static_cast<size_t>(c)];
            if (e.is_number_integer())
                m.at(i, c) = Rational(e.get<long>());
            else
                m.at(i, c) = rational_from_string(e.get<std::string>());
        }
    }
    return m;
}

Json to_json(const FrobeniusModel& model)
{
    Json gram = Json::array();
    for (long i = 0; i < model.mid_rank; ++i) {
        Json row = Json::array();
        for (long j = 0; j < model.mid_rank; ++j)
            row.push_back(static_cast<long>(model.gram.at(i, j).get_num().get_si()));
        gram.push_back(row);
    }
    Json j{{"name", model.name}, {"mid_rank", model.mid_rank}, {"gram", gram}};
    if (model.exceptional_slot)
        j["exceptional_slot"] = *model.exceptional_slot + 1;
    return j;
}

ModelPtr model_from_json(const Json& j)
{
    if (!j.is_object())
        throw input_error("surface description must be a JSON object");
    for (const char* field : {"name", "mid_rank", "gram"})
        if (!j.contains(field))
            throw input_error(std::string("surface description is missing '") + field + "'");
    std::string name = j.at("name").get<std::string>();
    long k = j.at("mid_rank").get<long>();
    const Json& g = j.at("gram");
    if (!g.is_array() || static_cast<long>(g.size()) != k)
        throw input_error("surface '" + name + "': gram must have mid_rank rows");
    ExactMatrix gram(k, k);
    for (long i = 0; i < k; ++i) {
        const Json& row = g[static_cast<size_t>(i)];
        if (!row.is_array() || static_cast<long>(row.size()) != k)
            throw input_error("surface '" + name + "': gram must have mid_rank columns");
        for (long c = 0; c < k; ++c) {
            if (!row[static_cast<size_t>(c)].is_number_integer())
                throw input_error("surface '" + name + "': gram entries must be integers");
            gram.at(i, c) = Rational(row[static_cast<size_t>(c)].get<long>());
        }
    }
    std::optional<long> exceptional;
    if (j.contains("exceptional_slot")) {
        if (!j.at("exceptional_slot").is_number_integer())
            throw input_error("surface '" + name + "': exceptional_slot must be an integer");
        exceptional = j.at("exceptional_slot").get<long>() - 1;
    }
    return make_model(std::move(name), std::move(gram), exceptional);
}

Json to_json(const FockState& s)
{
    Json terms = Json::array();
    for (const auto& [key, c] : s.terms())
        terms.push_back(Json::array({to_json(key), rational_to_string(c)}));
    return Json{{"model", s.model()->name}, {"terms", terms}};
}

FockState fockstate_from_json(const Json& j, const ModelPtr& model)
{
    if (!j.is_object() || !j.contains("model") || !j.contains("terms"))
        throw input_error("state needs model and terms");
    if (j.at("model").get<std::string>() != model->name)
        throw input_error("state belongs to model '" + j.at("model").get<std::string>() +
                          "', expected '" + model->name + "'");
    FockState s(model);
    for (const auto& t : j.at("terms")) {
        if (!t.is_array() || t.size() != 2)
            throw input_error("state term must be [key, rational]");
        MultiPartition key = multipartition_from_json(t[0]);
        if (key.slot_count() != model->dim())
            throw input_error("state key must have " + std::to_string(model->dim()) +
                              " slots");
        s.add_term(key, rational_from_string(t[1].get<std::string>()));
    }
    return s;
}

Json to_json(const BasisManifest& basis)
{
    Json labels = Json::array();
    for (const BasisLabel& l : basis.labels) {
        Json nus = Json::array();
        for (const Partition& nu : l.nus)
            nus.push_back(to_json(nu));
        labels.push_back(
            Json{{"lambda", to_json(l.lambda)}, {"mu", to_json(l.mu)}, {"nus", nus}});
    }
    Json j{{"n", basis.n}, {"model", basis.model->name}, {"labels", labels}};
    if (basis.gram_det)
        j["gram_det"] = rational_to_string(*basis.gram_det);
    return j;
}

Json to_json(const ModelPtr& model, const SectorDecomposition& parts)
{
    Json comps = Json::array();
    for (const auto& [key, state] : parts)
        comps.push_back(Json{{"lambda", to_json(key.lambda)},
                             {"mu", to_json(key.mu)},
                             {"state", to_json(state)}});
    return Json{{"model", model->name}, {"type", "sector"}, {"components", comps}};
}

Json to_json(const ModelPtr& model, const BlowupDecomposition& parts)
{
    Json comps = Json::array();
    for (const auto& [key, state] : parts)
        comps.push_back(Json{{"lambda", to_json(key.lambda)},
                             {"mu", to_json(key.mu)},
                             {"nu", to_json(key.nu)},
                             {"state", to_json(state)}});
    return Json{{"model", model->name}, {"type", "blowup"}, {"components", comps}};
}

Json load_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw input_error("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw input_error("parse failure in '" + path + "': " + e.what());
    }
}

} // namespace focklat
