#include "ecdlp/datasets.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace ecdlp {

std::string data_directory()
{
    if (const char* env = std::getenv("ECDLP_LADDER_DATA"))
        return env;
    return ECDLP_DATA_DIR;
}

std::string DatasetTable::serialize() const
{
    std::ostringstream out;
    auto join = [&out](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i)
                out << ',';
            out << cells[i];
        }
        out << '\n';
    };
    join(columns);
    for (const auto& row : rows)
        join(row);
    return out.str();
}

const std::string& DatasetTable::cell(long b, const std::string& column) const
{
    std::size_t col = columns.size();
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (columns[i] == column)
            col = i;
    if (col == columns.size())
        throw DatasetError("unknown column '" + column + "' in table " + id);
    for (const auto& row : rows)
        if (std::stol(row.at(0)) == b)
            return row.at(col);
    throw DatasetError("no row b=" + std::to_string(b) + " in table " + id);
}

double DatasetTable::value(long b, const std::string& column) const
{
    const std::string& raw = cell(b, column);
    std::size_t used = 0;
    double v = std::stod(raw, &used);
    if (used != raw.size())
        throw DatasetError("column '" + column + "' of table " + id + " is not numeric: " + raw);
    return v;
}

namespace {

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DatasetError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> split_csv_line(const std::string& line)
{
    std::vector<std::string> cells;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            cells.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    cells.push_back(cur);
    return cells;
}

}  // namespace

DatasetRegistry::DatasetRegistry(std::string dir) : dir_(dir.empty() ? data_directory() : std::move(dir))
{
    auto manifest = nlohmann::json::parse(slurp(dir_ + "/manifest.json"));
    for (const auto& entry : manifest.at("tables")) {
        DatasetTable t;
        t.id = entry.at("id").get<std::string>();
        t.file = entry.at("file").get<std::string>();
        std::istringstream in(slurp(dir_ + "/" + t.file));
        std::string line;
        bool first = true;
        while (std::getline(in, line)) {
            if (first) {
                t.columns = split_csv_line(line);
                first = false;
            } else if (!line.empty()) {
                t.rows.push_back(split_csv_line(line));
            }
        }
        tables_.emplace(t.id, std::move(t));
    }
}

const DatasetTable& DatasetRegistry::table(const std::string& id) const
{
    auto it = tables_.find(id);
    if (it == tables_.end())
        throw DatasetError("unknown table '" + id + "'");
    return it->second;
}

std::vector<std::string> DatasetRegistry::ids() const
{
    std::vector<std::string> out;
    for (const auto& [id, _] : tables_)
        out.push_back(id);
    return out;
}

}  // namespace ecdlp
