#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace gci::cli {

enum class Format { Text, Json };

struct Section {
    std::string name;
    nlohmann::ordered_json data;
};

struct Report {
    std::string command;
    nlohmann::ordered_json config;
    std::uint64_t seed = 0;
    std::vector<std::string> notes;
    std::vector<Section> sections;
};

// Left-aligned columns separated by two spaces; no trailing blanks.
class TextTable {
public:
    explicit TextTable(std::vector<std::string> header) : header_(std::move(header)) {}
    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
    std::string render(const std::string& indent = "  ") const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

std::string render(const Report& r, Format f);

enum class ErrorKind { Validation, Precondition, Budget };
int exit_code(ErrorKind k);
const char* kind_name(ErrorKind k);
std::string render_error(const std::string& command, ErrorKind kind, const std::string& message, Format f);

}  // namespace gci::cli
