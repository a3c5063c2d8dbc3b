#include "gci/cli/report.hpp"

#include <algorithm>
#include <sstream>

#include "gci/cli/config.hpp"
#include "gci/random_poly.hpp"

namespace gci::cli {
namespace {

using oj = nlohmann::ordered_json;

std::string scalar(const oj& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

std::string join(const oj& arr, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < arr.size(); ++i) out += (i ? sep : "") + scalar(arr[i]);
    return out;
}

std::string tuple(const oj& arr) { return "(" + join(arr, ",") + ")"; }

void kv(std::ostringstream& os, const std::string& k, const std::string& v) { os << "  " << k << ": " << v << "\n"; }

// Integer rows with right-aligned columns.
void matrix_rows(std::ostringstream& os, const oj& rows, const std::string& indent) {
    std::size_t w = 1;
    for (const auto& r : rows)
        for (const auto& x : r) w = std::max(w, scalar(x).size());
    for (const auto& r : rows) {
        os << indent << "[";
        for (std::size_t j = 0; j < r.size(); ++j) {
            std::string s = scalar(r[j]);
            os << (j ? " " : "") << std::string(w - s.size(), ' ') << s;
        }
        os << "]\n";
    }
}

void text_cohomology(std::ostringstream& os, const oj& d) {
    std::size_t n = 0;
    for (const auto& b : d["bundles"]) n = std::max(n, b["h"].size());
    std::vector<std::string> head = {"bundle", "degrees"};
    for (std::size_t r = 0; r < n; ++r) head.push_back("h^" + std::to_string(r));
    TextTable t(head);
    for (const auto& b : d["bundles"]) {
        std::vector<std::string> row = {scalar(b["label"]), tuple(b["degrees"])};
        for (const auto& h : b["h"]) row.push_back(scalar(h));
        t.add(row);
    }
    os << t.render();
}

void text_group(std::ostringstream& os, const std::string& label, const oj& g) {
    kv(os, label, "H^1 O" + tuple(g["bundle"]) + ", dim " + scalar(g["dimension"]));
    for (std::size_t i = 0; i < g["basis"].size(); ++i)
        os << "    [" << i << "] " << scalar(g["basis"][i]) << "\n";
}

void text_kernel(std::ostringstream& os, const oj& d) {
    const oj& h = d["hypothesis"];
    kv(os, "hypothesis", "h^1(Q, O" + tuple(h["bundle"]) + ") = " + scalar(h["h1"]) +
                             (h["holds"].get<bool>() ? " (holds)" : " (fails)"));
    text_group(os, "source", d["source"]);
    text_group(os, "target", d["target"]);
    const oj& m = d["matrix"];
    kv(os, "matrix", scalar(m["rows"]) + " x " + scalar(m["cols"]));
    matrix_rows(os, m["entries"], "    ");
    kv(os, "rank", scalar(d["rank"]));
    kv(os, "kernel_dim", scalar(d["kernel_dim"]));
    kv(os, "lower_bound", scalar(d["lower_bound"]));
    kv(os, "cokernel_dim", scalar(d["cokernel_dim"]));
    os << "  kernel_basis:\n";
    matrix_rows(os, d["kernel_basis"], "    ");
}

void text_equations(std::ostringstream& os, const oj& d) {
    kv(os, "q_source", scalar(d["q_source"]));
    kv(os, "q", "[" + join(d["q"], ", ") + "]");
    kv(os, "q_representative", scalar(d["q_representative"]));
    kv(os, "N", scalar(d["N"]));
    const oj& s = d["split"];
    kv(os, "F*q", scalar(s["product"]));
    kv(os, "tau0", scalar(s["tau0"]));
    kv(os, "tau1", scalar(s["tau1"]));
    kv(os, "middle", scalar(s["middle"]));
    kv(os, "F", scalar(d["F"]));
    kv(os, "G", scalar(d["G"]));
    kv(os, "H", scalar(d["H"]));
    kv(os, "A", scalar(d["A"]));
    kv(os, "syzygy", d["syzygy"].get<bool>() ? "true" : "false");
    kv(os, "base_locus_membership", d["base_locus_membership"].get<bool>() ? "true" : "false");
    for (const auto& f : d["fibers"]) {
        os << "  fiber (" << scalar(f["point"][0]) << " : " << scalar(f["point"][1])
           << "), generated by " << join(f["generating_pairs"], " or ") << "\n";
        for (const char* k : {"F", "G", "H", "A"}) os << "    " << k << ": " << scalar(f[k]) << "\n";
    }
}

void text_scan(std::ostringstream& os, const oj& d) {
    TextTable t({"system", "codim", "prime", "points", "zeros", "flagged"});
    for (const auto& r : d["runs"])
        t.add({scalar(r["system"]), scalar(r["codim"]), scalar(r["prime"]), scalar(r["points"]), scalar(r["zeros"]),
               scalar(r["flagged_count"])});
    os << t.render();
    for (const auto& r : d["runs"]) {
        if (r["flagged"].empty()) continue;
        os << "  flagged on " << scalar(r["system"]) << " mod " << scalar(r["prime"]) << ":\n";
        for (const auto& pt : r["flagged"]) os << "    " << tuple(pt) << "\n";
    }
}

void text_fields(std::ostringstream& os, const oj& d) {
    for (const auto& [k, v] : d.items()) {
        if (k == "notes" || k == "assumptions") continue;
        kv(os, k, v.is_array() ? "[" + join(v, ", ") + "]" : scalar(v));
    }
    for (const char* list : {"assumptions", "notes"}) {
        if (!d.contains(list)) continue;
        os << "  " << list << ":\n";
        for (const auto& s : d[list]) os << "    - " << scalar(s) << "\n";
    }
}

}  // namespace

std::string TextTable::render(const std::string& indent) const {
    std::vector<std::size_t> w(header_.size(), 0);
    auto widen = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size() && i < w.size(); ++i) w[i] = std::max(w[i], row[i].size());
    };
    widen(header_);
    for (const auto& r : rows_) widen(r);
    auto line = [&](const std::vector<std::string>& row) {
        std::string s = indent;
        for (std::size_t i = 0; i < row.size(); ++i) {
            s += row[i];
            if (i + 1 < row.size()) s += std::string(w[i] - row[i].size() + 2, ' ');
        }
        return s + "\n";
    };
    std::string out = line(header_);
    for (const auto& r : rows_) out += line(r);
    return out;
}

std::string render(const Report& r, Format f) {
    if (f == Format::Json) {
        oj j;
        j["tool"] = "gci";
        j["version"] = kToolVersion;
        j["command"] = r.command;
        j["seed"] = r.seed;
        j["prng"] = kPrngName;
        j["config"] = r.config;
        j["notes"] = r.notes;
        oj sec = oj::object();
        for (const auto& s : r.sections) sec[s.name] = s.data;
        j["results"] = sec;
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "gci " << kToolVersion << " report: " << r.command << "\n";
    if (r.config.contains("name")) os << "name: " << r.config["name"].get<std::string>() << "\n";
    os << "seed: " << r.seed << " (" << kPrngName << ")\n";
    os << "config: " << r.config.dump() << "\n";
    if (!r.notes.empty()) {
        os << "notes:\n";
        for (const auto& n : r.notes) os << "  - " << n << "\n";
    }
    for (const auto& s : r.sections) {
        os << "\n== " << s.name << " ==\n";
        if (s.name == "cohomology")
            text_cohomology(os, s.data);
        else if (s.name == "kernel")
            text_kernel(os, s.data);
        else if (s.name == "equations")
            text_equations(os, s.data);
        else if (s.name == "scan")
            text_scan(os, s.data);
        else
            text_fields(os, s.data);
    }
    return os.str();
}

int exit_code(ErrorKind k) {
    switch (k) {
        case ErrorKind::Validation: return 1;
        case ErrorKind::Precondition: return 2;
        case ErrorKind::Budget: return 3;
    }
    return 1;
}

const char* kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::Validation: return "validation";
        case ErrorKind::Precondition: return "precondition";
        case ErrorKind::Budget: return "budget";
    }
    return "validation";
}

std::string render_error(const std::string& command, ErrorKind kind, const std::string& message, Format f) {
    if (f == Format::Json) {
        oj j;
        j["tool"] = "gci";
        j["version"] = kToolVersion;
        j["command"] = command;
        j["error"] = oj{{"kind", kind_name(kind)}, {"exit_code", exit_code(kind)}, {"message", message}};
        return j.dump(2) + "\n";
    }
    return "gci " + std::string(kToolVersion) + " report: " + command + "\nerror (" + kind_name(kind) +
           "): " + message + "\n";
}

}  // namespace gci::cli
