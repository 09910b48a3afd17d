#include "ramsey/certificate.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace ramsey {

namespace {

constexpr const char* kHeader = "poset-ramsey-cert v1";

std::string colors_to_text(const ChainColoring& c) {
    std::string out;
    if (c.k <= 9) {
        out.reserve(c.colors.size());
        for (auto v : c.colors) out += static_cast<char>('0' + v);
    } else {
        for (size_t i = 0; i < c.colors.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(int(c.colors[i]));
        }
    }
    return out;
}

std::vector<std::uint8_t> colors_from_text(const std::string& text, int k) {
    std::vector<std::uint8_t> out;
    if (k <= 9) {
        out.reserve(text.size());
        for (char ch : text) {
            if (ch < '0' || ch > '9') throw ParseError("colors: non-digit character");
            out.push_back(static_cast<std::uint8_t>(ch - '0'));
        }
    } else {
        std::istringstream in(text);
        std::string item;
        while (std::getline(in, item, ',')) {
            int v = 0;
            try {
                size_t pos = 0;
                v = std::stoi(item, &pos);
                if (pos != item.size()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw ParseError("colors: bad integer '" + item + "'");
            }
            out.push_back(static_cast<std::uint8_t>(v));
        }
    }
    return out;
}

long parse_long(const std::map<std::string, std::string>& kv, const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end()) throw ParseError("missing field '" + key + "'");
    try {
        size_t pos = 0;
        long v = std::stol(it->second, &pos);
        if (pos != it->second.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ParseError("field '" + key + "': bad integer '" + it->second + "'");
    }
}

const std::string& require(const std::map<std::string, std::string>& kv, const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end()) throw ParseError("missing field '" + key + "'");
    return it->second;
}

}  // namespace

Certificate make_good_coloring_certificate(const RamseyInstance& instance, int host_n,
                                           ChainColoring coloring) {
    Certificate c;
    c.kind = Certificate::Kind::GoodColoring;
    c.instance = instance;
    c.host_n = host_n;
    c.coloring = std::move(coloring);
    return c;
}

Certificate make_exhaustion_certificate(const RamseyInstance& instance, int host_n,
                                        const SearchStats& stats) {
    Certificate c;
    c.kind = Certificate::Kind::Exhaustion;
    c.instance = instance;
    c.host_n = host_n;
    c.nodes = stats.nodes;
    c.group = stats.group;
    c.elapsed_ms = stats.elapsed_ms;
    return c;
}

void emit_certificate(const Certificate& cert, std::ostream& out) {
    if (cert.kind == Certificate::Kind::GoodColoring) {
        auto verdict = verify_coloring(cert.instance, cert.host_n, cert.coloring);
        if (!verdict.good)
            throw VerificationError("refusing to emit a good-coloring certificate that fails "
                                    "verification (color " + std::to_string(verdict.bad_color) + ")");
    }
    out << kHeader << "\n";
    out << "kind:" << (cert.kind == Certificate::Kind::GoodColoring ? "good-coloring" : "exhaustion")
        << "\n";
    out << "mode:" << to_string(cert.instance.mode) << "\n";
    out << "t:" << cert.instance.t << "\n";
    out << "k:" << cert.instance.k << "\n";
    out << "host_n:" << cert.host_n << "\n";
    out << "targets:" << format_target_list(cert.instance.targets) << "\n";
    if (cert.kind == Certificate::Kind::GoodColoring) {
        out << "colors:" << colors_to_text(cert.coloring) << "\n";
    } else {
        out << "nodes:" << cert.nodes << "\n";
        out << "group:" << cert.group << "\n";
        out << "elapsed_ms:" << cert.elapsed_ms << "\n";
    }
}

void emit_certificate_file(const Certificate& cert, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    emit_certificate(cert, out);
}

Certificate load_certificate(std::istream& in) {
    Certificate cert = parse_certificate(in);
    if (cert.kind == Certificate::Kind::GoodColoring) {
        auto verdict = verify_coloring(cert.instance, cert.host_n, cert.coloring);
        if (!verdict.good)
            throw VerificationError("good-coloring certificate fails verification: color " +
                                    std::to_string(verdict.bad_color) +
                                    " contains a monochromatic copy");
    }
    return cert;
}

Certificate parse_certificate(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kHeader)
        throw ParseError("bad or missing certificate header");
    std::map<std::string, std::string> kv;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) throw ParseError("bad line '" + line + "'");
        kv[line.substr(0, colon)] = line.substr(colon + 1);
    }

    Certificate cert;
    const std::string& kind = require(kv, "kind");
    if (kind == "good-coloring")
        cert.kind = Certificate::Kind::GoodColoring;
    else if (kind == "exhaustion")
        cert.kind = Certificate::Kind::Exhaustion;
    else
        throw ParseError("unknown kind '" + kind + "'");

    cert.instance.mode = embedding_mode_from_string(require(kv, "mode"));
    cert.instance.t = static_cast<int>(parse_long(kv, "t"));
    cert.instance.k = static_cast<int>(parse_long(kv, "k"));
    cert.host_n = static_cast<int>(parse_long(kv, "host_n"));
    try {
        cert.instance.targets = parse_target_list(require(kv, "targets"));
    } catch (const ParameterError& e) {
        throw ParseError(std::string("targets: ") + e.what());
    }
    if (static_cast<int>(cert.instance.targets.size()) != cert.instance.k)
        throw ParseError("targets count does not match k");

    if (cert.kind == Certificate::Kind::GoodColoring) {
        cert.coloring.host_n = cert.host_n;
        cert.coloring.t = cert.instance.t;
        cert.coloring.k = cert.instance.k;
        cert.coloring.colors = colors_from_text(require(kv, "colors"), cert.instance.k);
        try {
            cert.coloring.validate();
        } catch (const ParameterError& e) {
            throw ParseError(std::string("colors: ") + e.what());
        }
    } else {
        cert.nodes = static_cast<std::uint64_t>(parse_long(kv, "nodes"));
        cert.group = require(kv, "group");
        cert.elapsed_ms = static_cast<std::uint64_t>(parse_long(kv, "elapsed_ms"));
    }
    return cert;
}

Certificate load_certificate_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return load_certificate(in);
}

}  // namespace ramsey
