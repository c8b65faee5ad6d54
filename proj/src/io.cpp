#include <lpont/error.hpp>
#include <lpont/io.hpp>

#include <fstream>
#include <sstream>

namespace lpont {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

FacetFile parse_facet_text(const std::string& text) {
    FacetFile out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.rfind("dim=", 0) == 0) {
            try {
                out.dim = std::stoi(line.substr(4));
            } catch (const std::exception&) {
                throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": bad dim header");
            }
            continue;
        }
        if (line == "orient=explicit") {
            if (!out.rows.empty()) {
                throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": orient=explicit must precede facets");
            }
            out.explicit_orientation = true;
            continue;
        }
        std::istringstream row(line);
        std::vector<Vertex> facet;
        std::string tok;
        while (row >> tok) {
            std::size_t used = 0;
            long v = 0;
            try {
                v = std::stol(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tok.size() || v <= 0 || v > 1'000'000) {
                throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": bad vertex label '" + tok + "'");
            }
            facet.push_back(static_cast<Vertex>(v));
        }
        out.rows.push_back(std::move(facet));
    }
    if (out.rows.empty()) throw Error(ErrorKind::Parse, "no facets");
    if (out.dim && static_cast<std::size_t>(*out.dim + 1) != out.rows.front().size()) {
        throw Error(ErrorKind::Parse, "dim header disagrees with facet size");
    }
    return out;
}

FacetFile read_facet_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_facet_text(ss.str());
}

OrientedComplex to_oriented(const FacetFile& file) {
    if (file.explicit_orientation) return orient_explicit(file.rows);
    return orient(build_complex(file.rows), 1);
}

OrientedComplex load_oriented(const std::filesystem::path& path) { return to_oriented(read_facet_file(path)); }

std::string format_facets(const OrientedComplex& k) {
    std::ostringstream os;
    os << "orient=explicit\n";
    os << "dim=" << k.dim() << '\n';
    for (std::size_t i = 0; i < k.num_facets(); ++i) {
        auto vs = k.facets()[i].to_vector();
        if (k.sign(i) < 0 && vs.size() >= 2) std::swap(vs[0], vs[1]);
        for (std::size_t j = 0; j < vs.size(); ++j) os << (j ? " " : "") << vs[j];
        os << '\n';
    }
    return os.str();
}

}  // namespace lpont
