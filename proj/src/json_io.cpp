#include "congmon/json_io.hpp"

namespace congmon {

nlohmann::json matrix_to_json(const Matrix& m) {
    nlohmann::json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["field"] = m.tag().name();
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t jj = 0; jj < m.cols(); ++jj) row.push_back(m.at(i, jj).str());
        rows.push_back(row);
    }
    j["entries"] = rows;
    return j;
}

Matrix matrix_from_json(const nlohmann::json& j) {
    try {
        const std::size_t rows = j.at("rows").get<std::size_t>();
        const std::size_t cols = j.at("cols").get<std::size_t>();
        const FieldTag tag = FieldTag::from_name(j.at("field").get<std::string>());
        const auto& entries = j.at("entries");
        if (!entries.is_array() || entries.size() != rows)
            throw parse_error("entries row count mismatch");
        Matrix m(rows, cols, tag);
        for (std::size_t i = 0; i < rows; ++i) {
            const auto& row = entries[i];
            if (!row.is_array() || row.size() != cols)
                throw parse_error("entries column count mismatch");
            for (std::size_t c = 0; c < cols; ++c) {
                if (row[c].is_number_integer())
                    m.at(i, c) = Scalar::integer(row[c].get<long>(), tag);
                else
                    m.at(i, c) = Scalar::parse(row[c].get<std::string>(), tag);
            }
        }
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad matrix JSON: ") + e.what());
    }
}

} // namespace congmon
