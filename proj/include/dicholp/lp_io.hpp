#pragma once

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dicholp/bisection_solver.hpp"
#include "dicholp/lp_model.hpp"
#include "dicholp/simplex.hpp"
#include "dicholp/tolerances.hpp"

namespace dicholp {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line_, int col_)
        : std::runtime_error("line " + std::to_string(line_) + ", col " + std::to_string(col_) +
                             ": " + what),
          line(line_),
          col(col_) {}

    int line;
    int col;
};

/// A parsed problem in internal maximization form. When the source said
/// `min`, c has been negated and the flag is set so reported objective
/// values can be negated back on output.
struct ParsedLp {
    LinearProgram lp;
    bool minimize = false;
};

enum class Method { Bisect, Simplex, Both };
enum class OutputMode { Human, Json };

inline std::string to_string(Method m) {
    switch (m) {
        case Method::Bisect: return "bisect";
        case Method::Simplex: return "simplex";
        case Method::Both: return "both";
    }
    return "?";
}

struct SolverConfig {
    Method method = Method::Bisect;
    ToleranceSet tolerances{};
    BracketMode bracket_mode = BracketMode::Doubling;
    OutputMode output = OutputMode::Human;
    bool trace_enabled = false;
    std::optional<long long> seed;
};

namespace io_detail {

struct Token {
    std::string text;
    int line = 0;
    int col = 0;
};

struct TokenLine {
    int number = 0;
    std::vector<Token> tokens;
};

// Split into nonempty logical lines of whitespace-separated tokens,
// discarding everything from '#' to end of line.
inline std::vector<TokenLine> split_lines(std::string_view text) {
    std::vector<TokenLine> out;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view raw = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        ++line_no;

        const std::size_t hash = raw.find('#');
        if (hash != std::string_view::npos) raw = raw.substr(0, hash);

        TokenLine tl;
        tl.number = line_no;
        std::size_t i = 0;
        while (i < raw.size()) {
            if (std::isspace(static_cast<unsigned char>(raw[i]))) { ++i; continue; }
            std::size_t j = i;
            while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
            tl.tokens.push_back({std::string(raw.substr(i, j - i)), line_no, static_cast<int>(i) + 1});
            i = j;
        }
        if (!tl.tokens.empty()) out.push_back(std::move(tl));

        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    return out;
}

inline double parse_literal(const Token& tok) {
    const char* begin = tok.text.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end != begin + tok.text.size() || tok.text.empty())
        throw ParseError("bad numeric literal '" + tok.text + "'", tok.line, tok.col);
    if (!std::isfinite(v))
        throw ParseError("non-finite literal '" + tok.text + "'", tok.line, tok.col);
    return v;
}

inline std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// %.17g, but always with a decimal point or exponent so the value reads
// as a JSON float rather than an integer.
inline std::string json_number(double v) {
    std::string s = format_number(v);
    if (s.find_first_of(".eE") == std::string::npos) s += ".0";
    return s;
}

inline std::string json_vector(const std::vector<double>& xs) {
    std::string s = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ",";
        s += json_number(xs[i]);
    }
    s += "]";
    return s;
}

inline std::string json_trace(const std::vector<TraceEntry>& trace) {
    std::string s = "[";
    for (std::size_t i = 0; i < trace.size(); ++i) {
        if (i) s += ",";
        s += "[" + json_number(trace[i].alpha) + (trace[i].feasible ? ",true]" : ",false]");
    }
    s += "]";
    return s;
}

inline void human_field(std::string& out, const char* label, const std::string& value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%-14s", label);
    out += buf;
    out += value;
    out += '\n';
}

inline std::string human_vector(const std::vector<double>& xs) {
    std::string s = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ", ";
        s += format_number(xs[i]);
    }
    s += "]";
    return s;
}

}  // namespace io_detail

inline ParsedLp parse_lp_text(std::string_view text) {
    using io_detail::parse_literal;
    const auto lines = io_detail::split_lines(text);

    if (lines.empty()) throw ParseError("expected 'max' or 'min' header", 1, 1);
    const auto& header = lines[0];
    if (header.tokens.size() != 1 ||
        (header.tokens[0].text != "max" && header.tokens[0].text != "min"))
        throw ParseError("expected 'max' or 'min' header", header.tokens[0].line, header.tokens[0].col);
    const bool minimize = header.tokens[0].text == "min";

    if (lines.size() < 2)
        throw ParseError("expected 'obj' line after the header", header.number, 1);
    const auto& obj = lines[1];
    if (obj.tokens[0].text != "obj")
        throw ParseError("expected 'obj'", obj.tokens[0].line, obj.tokens[0].col);
    if (obj.tokens.size() < 2)
        throw ParseError("objective needs at least one coefficient", obj.tokens[0].line, obj.tokens[0].col);

    std::vector<double> c;
    for (std::size_t i = 1; i < obj.tokens.size(); ++i) c.push_back(parse_literal(obj.tokens[i]));
    const int n = static_cast<int>(c.size());

    std::vector<std::vector<double>> rows;
    std::vector<double> rhs;
    for (std::size_t li = 2; li < lines.size(); ++li) {
        const auto& ln = lines[li];
        const auto& head = ln.tokens[0];
        if (head.text != "row")
            throw ParseError("expected 'row'", head.line, head.col);
        if (static_cast<int>(ln.tokens.size()) != n + 3)
            throw ParseError("row needs " + std::to_string(n) +
                                 " coefficients, an operator, and a right-hand side",
                             head.line, head.col);

        std::vector<double> a(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(j)] = parse_literal(ln.tokens[static_cast<std::size_t>(j) + 1]);
        const auto& op = ln.tokens[static_cast<std::size_t>(n) + 1];
        const double r = parse_literal(ln.tokens[static_cast<std::size_t>(n) + 2]);

        if (op.text == "<=") {
            rows.push_back(std::move(a));
            rhs.push_back(r);
        } else if (op.text == ">=") {
            for (double& v : a) v = -v;
            rows.push_back(std::move(a));
            rhs.push_back(-r);
        } else if (op.text == "=") {
            std::vector<double> neg(a);
            for (double& v : neg) v = -v;
            rows.push_back(std::move(a));
            rhs.push_back(r);
            rows.push_back(std::move(neg));
            rhs.push_back(-r);
        } else {
            throw ParseError("expected '<=', '=', or '>='", op.line, op.col);
        }
    }

    const int m = static_cast<int>(rows.size());
    Matrix A(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) A(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];

    if (minimize)
        for (double& v : c) v = -v;

    return {LinearProgram(std::move(c), std::move(A), std::move(rhs)), minimize};
}

inline ParsedLp parse_lp_text(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_lp_text(std::string_view(buf.str()));
}

inline std::string print_lp_text(const ParsedLp& p) {
    using io_detail::format_number;
    std::string out = p.minimize ? "min\n" : "max\n";
    out += "obj";
    for (int j = 0; j < p.lp.n; ++j) {
        out += ' ';
        out += format_number(p.minimize ? -p.lp.c[static_cast<std::size_t>(j)] : p.lp.c[static_cast<std::size_t>(j)]);
    }
    out += '\n';
    for (int i = 0; i < p.lp.m; ++i) {
        out += "row";
        for (int j = 0; j < p.lp.n; ++j) {
            out += ' ';
            out += format_number(p.lp.A(i, j));
        }
        out += " <= ";
        out += format_number(p.lp.b[static_cast<std::size_t>(i)]);
        out += '\n';
    }
    return out;
}

inline std::string print_lp_text(const LinearProgram& lp) {
    return print_lp_text(ParsedLp{lp, false});
}

/// Flip the reported objective value for problems parsed from a `min`
/// header; the solution vector and bracket data are unaffected.
inline void negate_objective_value(SolveOutcome& o) {
    if (o.value) o.value = -*o.value;
}

inline void negate_objective_value(SimplexResult& r) {
    if (r.value) r.value = -*r.value;
}

inline std::optional<double> value_gap(const SolveOutcome& a, const SimplexResult& b) {
    if (a.status == SolveStatus::Optimal && b.status == SolveStatus::Optimal)
        return std::abs(*a.value - *b.value);
    return std::nullopt;
}

inline std::string write_outcome(const SolveOutcome& out, const SolverConfig& cfg) {
    using namespace io_detail;
    if (cfg.output == OutputMode::Json) {
        std::string s = "{\"status\":\"" + std::string(to_string(out.status)) + "\"";
        if (out.status == SolveStatus::Optimal) {
            s += ",\"value\":" + json_number(*out.value);
            s += ",\"x\":" + json_vector(*out.x_star);
        }
        s += ",\"iterations\":" + std::to_string(out.iterations);
        if (out.status == SolveStatus::Optimal)
            s += ",\"bracket_width\":" + json_number(*out.bracket_width);
        s += ",\"trace\":" + json_trace(cfg.trace_enabled ? out.trace : std::vector<TraceEntry>{});
        s += ",\"method\":\"bisect\"}";
        return s;
    }

    std::string s;
    human_field(s, "status", to_string(out.status));
    if (out.status == SolveStatus::Optimal) {
        human_field(s, "value", format_number(*out.value));
        human_field(s, "x", human_vector(*out.x_star));
    }
    human_field(s, "iterations", std::to_string(out.iterations));
    if (out.status == SolveStatus::Optimal)
        human_field(s, "bracket_width", format_number(*out.bracket_width));
    human_field(s, "method", "bisect");
    if (cfg.trace_enabled) {
        s += "trace\n";
        for (std::size_t i = 0; i < out.trace.size(); ++i) {
            char buf[96];
            std::snprintf(buf, sizeof buf, "  %4zu  alpha %-24s %s\n", i + 1,
                          format_number(out.trace[i].alpha).c_str(),
                          out.trace[i].feasible ? "feasible" : "infeasible");
            s += buf;
        }
    }
    return s;
}

inline std::string write_outcome(const SimplexResult& res, const SolverConfig& cfg) {
    using namespace io_detail;
    if (cfg.output == OutputMode::Json) {
        std::string s = "{\"status\":\"" + std::string(to_string(res.status)) + "\"";
        if (res.status == SolveStatus::Optimal) {
            s += ",\"value\":" + json_number(*res.value);
            s += ",\"x\":" + json_vector(*res.x_star);
        }
        s += ",\"iterations\":" + std::to_string(res.pivots);
        s += ",\"method\":\"simplex\"}";
        return s;
    }

    std::string s;
    human_field(s, "status", to_string(res.status));
    if (res.status == SolveStatus::Optimal) {
        human_field(s, "value", format_number(*res.value));
        human_field(s, "x", human_vector(*res.x_star));
    }
    human_field(s, "iterations", std::to_string(res.pivots));
    human_field(s, "method", "simplex");
    return s;
}

inline std::string write_both_outcome(const SolveOutcome& bo, const SimplexResult& sr,
                                      const SolverConfig& cfg) {
    using namespace io_detail;
    const auto gap = value_gap(bo, sr);
    if (cfg.output == OutputMode::Json) {
        std::string s = "{\"status\":\"" + std::string(to_string(bo.status)) + "\"";
        s += ",\"bisect\":" + write_outcome(bo, cfg);
        s += ",\"simplex\":" + write_outcome(sr, cfg);
        if (gap) s += ",\"value_gap\":" + json_number(*gap);
        s += ",\"method\":\"both\"}";
        return s;
    }

    std::string s;
    human_field(s, "status", to_string(bo.status));
    if (gap) human_field(s, "value_gap", format_number(*gap));
    human_field(s, "method", "both");
    s += "--- bisect ---\n" + write_outcome(bo, cfg);
    s += "--- simplex ---\n" + write_outcome(sr, cfg);
    return s;
}

}  // namespace dicholp
