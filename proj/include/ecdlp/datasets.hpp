#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ecdlp {

// ECDLP_LADDER_DATA env var when set, otherwise the bundled directory.
std::string data_directory();

struct DatasetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One published table, cells kept as raw text so that serialization
// round-trips the checked-in file byte for byte.
struct DatasetTable {
    std::string id;
    std::string file;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    std::string serialize() const;

    const std::string& cell(long b, const std::string& column) const;
    double value(long b, const std::string& column) const;
};

class DatasetRegistry {
public:
    // Loads every table listed in the manifest under `dir` (default:
    // data_directory()).
    explicit DatasetRegistry(std::string dir = {});

    const DatasetTable& table(const std::string& id) const;
    std::vector<std::string> ids() const;
    const std::string& directory() const { return dir_; }

private:
    std::string dir_;
    std::map<std::string, DatasetTable> tables_;
};

}  // namespace ecdlp
