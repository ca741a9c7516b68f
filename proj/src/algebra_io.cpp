#include "hhint/algebra_io.hpp"

#include <fstream>
#include <sstream>

namespace hhint {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

long long parse_int(const std::string& tok, int line) {
    try {
        size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, "expected integer, got '" + tok + "'");
    }
}

// "0:1, 3:2" or "0:1 3:2" -> sparse vector entries.
std::vector<std::pair<Index, long long>> parse_sparse(const std::string& text, int line) {
    std::vector<std::pair<Index, long long>> out;
    std::string norm = text;
    for (char& c : norm)
        if (c == ',') c = ' ';
    std::istringstream ss(norm);
    std::string tok;
    while (ss >> tok) {
        size_t colon = tok.find(':');
        if (colon == std::string::npos)
            throw ParseError(line, "expected index:coefficient, got '" + tok + "'");
        long long idx = parse_int(tok.substr(0, colon), line);
        long long coeff = parse_int(tok.substr(colon + 1), line);
        if (idx < 0) throw ParseError(line, "negative basis index");
        out.emplace_back(static_cast<Index>(idx), coeff);
    }
    return out;
}

}  // namespace

Algebra parse_algebra(std::istream& in, const std::string& name) {
    long long p = -1, dim = -1;
    std::vector<std::string> labels;
    std::vector<std::pair<Index, long long>> unit_entries;
    bool saw_unit = false;
    struct MulLine {
        Index i, j;
        std::vector<std::pair<Index, long long>> entries;
        int line;
    };
    std::vector<MulLine> muls;

    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = raw;
        size_t hash = s.find('#');
        if (hash != std::string::npos) s = s.substr(0, hash);
        s = trim(s);
        if (s.empty()) continue;

        size_t eq = s.find('=');
        if (eq == std::string::npos) throw ParseError(line, "expected '=' in declaration");
        std::string key = trim(s.substr(0, eq));
        std::string val = trim(s.substr(eq + 1));

        if (key == "p") {
            p = parse_int(val, line);
        } else if (key == "dim") {
            dim = parse_int(val, line);
        } else if (key == "basis") {
            std::istringstream ss(val);
            std::string lab;
            while (std::getline(ss, lab, ',')) labels.push_back(trim(lab));
        } else if (key == "unit") {
            unit_entries = parse_sparse(val, line);
            saw_unit = true;
        } else if (key.rfind("mul", 0) == 0) {
            std::istringstream ss(key.substr(3));
            long long i, j;
            if (!(ss >> i >> j) || !(ss >> std::ws).eof())
                throw ParseError(line, "expected 'mul <i> <j> = ...'");
            if (i < 0 || j < 0) throw ParseError(line, "negative basis index");
            muls.push_back({static_cast<Index>(i), static_cast<Index>(j),
                            parse_sparse(val, line), line});
        } else {
            throw ParseError(line, "unknown declaration '" + key + "'");
        }
    }

    if (p < 0) throw ParseError(line, "missing 'p ='");
    if (dim < 1) throw ParseError(line, "missing or invalid 'dim ='");
    if (!saw_unit) throw ParseError(line, "missing 'unit ='");
    uint32_t up = static_cast<uint32_t>(p);
    require_prime(up);
    Index d = static_cast<Index>(dim);

    FVector unit = fzvec(d, up);
    for (auto [i, c] : unit_entries) {
        if (i >= d) throw ParseError(line, "unit index out of range");
        unit(i) = Fp(c, up);
    }

    std::vector<FMatrix> lmul(static_cast<size_t>(d));
    for (Index i = 0; i < d; ++i) lmul[static_cast<size_t>(i)] = fzeros(d, d, up);
    std::vector<std::vector<bool>> seen(static_cast<size_t>(d),
                                        std::vector<bool>(static_cast<size_t>(d), false));
    for (const MulLine& m : muls) {
        if (m.i >= d || m.j >= d) throw ParseError(m.line, "mul indices out of range");
        if (seen[static_cast<size_t>(m.i)][static_cast<size_t>(m.j)])
            throw ParseError(m.line, "duplicate mul declaration");
        seen[static_cast<size_t>(m.i)][static_cast<size_t>(m.j)] = true;
        for (auto [k, c] : m.entries) {
            if (k >= d) throw ParseError(m.line, "product index out of range");
            lmul[static_cast<size_t>(m.i)](k, m.j) = Fp(c, up);
        }
    }

    return from_structure_constants(up, std::move(lmul), std::move(unit), std::move(labels),
                                    name);
}

Algebra load_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open algebra file: " + path);
    return parse_algebra(in, path);
}

std::string dump_algebra(const Algebra& a) {
    std::ostringstream out;
    out << "# " << a.name() << "\n";
    out << "p = " << a.p() << "\n";
    out << "dim = " << a.dim() << "\n";
    out << "basis = ";
    for (Index i = 0; i < a.dim(); ++i) {
        if (i) out << ", ";
        out << a.label(i);
    }
    out << "\n";
    out << "unit =";
    for (Index i = 0; i < a.dim(); ++i)
        if (!a.unit()(i).is_zero()) out << " " << i << ":" << a.unit()(i).value();
    out << "\n";
    for (Index i = 0; i < a.dim(); ++i) {
        for (Index j = 0; j < a.dim(); ++j) {
            FVector prod = a.basis_product(i, j);
            if (is_zero(prod)) continue;
            out << "mul " << i << " " << j << " =";
            for (Index k = 0; k < a.dim(); ++k)
                if (!prod(k).is_zero()) out << " " << k << ":" << prod(k).value();
            out << "\n";
        }
    }
    return out.str();
}

}  // namespace hhint
