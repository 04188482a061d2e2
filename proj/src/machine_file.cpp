#include "ptm/machine_file.hpp"

#include "ptm/errors.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace ptm {

namespace {

struct Token {
    std::string text;
    std::size_t column = 0;  // 1-based
};

struct Line {
    std::size_t number = 0;
    std::string key;
    std::size_t key_column = 0;
    std::vector<Token> values;
};

bool is_word(std::string_view s) {
    if (s.empty()) return false;
    for (unsigned char ch : s)
        if (!std::isalnum(ch)) return false;
    return true;
}

bool is_symbol_token(std::string_view s) {
    return is_word(s) || s == kEndMarkerToken || s == kBlankToken;
}

std::vector<Token> split(std::string_view text, std::size_t first_column) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i == text.size()) break;
        std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        out.push_back(Token{std::string(text.substr(start, i - start)), first_column + start});
    }
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    TuringMachine parse() {
        read_lines();
        auto states = words(require("states"), "state");
        const Line& start_line = require("start");
        const Line& accept_line = require("accept");
        const Line& reject_line = require("reject");
        const Token& start = single(start_line);
        const Token& accept = single(accept_line);
        const Token& reject = single(reject_line);
        auto tape = symbols(declared("tape_alphabet"));
        auto input = symbols(declared("input_alphabet"));

        auto known = [&](const Line& line, const Token& t) {
            for (const auto& s : states)
                if (s == t.text) return;
            throw ParseError(line.number, t.column, "unknown state '" + t.text + "'");
        };
        known(start_line, start);
        known(accept_line, accept);
        known(reject_line, reject);

        for (std::size_t i = 0; i < states.size(); ++i)
            for (std::size_t k = 0; k < i; ++k)
                if (states[k] == states[i])
                    throw ParseError(require("states").number, require("states").values[i].column,
                                     "duplicate state '" + states[i] + "'");
        TuringMachine tm(states, start.text, accept.text, reject.text, tape, input);

        for (const auto& line : deltas_) {
            const auto& v = line.values;
            if (v.size() != 6 || v[2].text != "->")
                throw ParseError(line.number, line.key_column,
                                 "expected 'delta: <state> <symbol> -> <state> <symbol> <L|R>'");
            StateId q = state(tm, line, v[0]);
            SymbolId z = symbol(tm, line, v[1]);
            StateId q2 = state(tm, line, v[3]);
            SymbolId z2 = symbol(tm, line, v[4]);
            Move m;
            if (v[5].text == "L")
                m = Move::Left;
            else if (v[5].text == "R")
                m = Move::Right;
            else
                throw ParseError(line.number, v[5].column, "direction must be L or R, got '" + v[5].text + "'");
            if (tm.transition(q, z))
                throw ParseError(line.number, line.key_column,
                                 "duplicate delta entry for (" + v[0].text + "," + v[1].text + ")");
            tm.set_transition(q, z, Action{q2, z2, m});
        }
        return tm;
    }

private:
    void read_lines() {
        std::size_t number = 0;
        std::size_t pos = 0;
        while (pos <= text_.size()) {
            std::size_t end = text_.find('\n', pos);
            if (end == std::string_view::npos) end = text_.size();
            std::string_view raw = text_.substr(pos, end - pos);
            pos = end + 1;
            ++number;
            if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
            if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
            for (std::size_t i = 0; i < raw.size(); ++i)
                if (static_cast<unsigned char>(raw[i]) > 127)
                    throw ParseError(number, i + 1, "non-ASCII character");

            std::size_t first = raw.find_first_not_of(" \t");
            if (first == std::string_view::npos) continue;
            std::size_t colon = raw.find(':');
            if (colon == std::string_view::npos)
                throw ParseError(number, first + 1, "expected '<key>: <values>'");
            std::string key(raw.substr(first, colon - first));
            while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.pop_back();

            Line line{number, key, first + 1, split(raw.substr(colon + 1), colon + 2)};
            if (key == "delta") {
                deltas_.push_back(std::move(line));
            } else if (key == "states" || key == "start" || key == "accept" || key == "reject" ||
                       key == "input_alphabet" || key == "tape_alphabet") {
                if (decls_.count(key))
                    throw ParseError(number, first + 1, "duplicate " + key + " declaration");
                decls_.emplace(key, std::move(line));
            } else {
                throw ParseError(number, first + 1, "unknown key '" + key + "'");
            }
        }
        total_lines_ = number;
    }

    const Line& require(const std::string& key) {
        auto it = decls_.find(key);
        if (it == decls_.end()) throw ParseError(total_lines_, 1, "missing " + key + " declaration");
        return it->second;
    }

    std::optional<Line> declared(const std::string& key) const {
        auto it = decls_.find(key);
        if (it == decls_.end()) return std::nullopt;
        return it->second;
    }

    std::vector<std::string> words(const Line& line, const char* what) {
        if (line.values.empty()) throw ParseError(line.number, line.key_column, "empty " + line.key + " declaration");
        std::vector<std::string> out;
        for (const auto& t : line.values) {
            if (!is_word(t.text))
                throw ParseError(line.number, t.column, std::string("invalid ") + what + " name '" + t.text + "'");
            out.push_back(t.text);
        }
        return out;
    }

    const Token& single(const Line& line) {
        if (line.values.size() != 1)
            throw ParseError(line.number, line.key_column, line.key + " takes exactly one state");
        return line.values.front();
    }

    std::vector<std::string> symbols(const std::optional<Line>& line) {
        std::vector<std::string> out;
        if (!line) return out;
        for (const auto& t : line->values) {
            if (!is_symbol_token(t.text))
                throw ParseError(line->number, t.column, "invalid symbol '" + t.text + "'");
            out.push_back(t.text);
        }
        return out;
    }

    StateId state(const TuringMachine& tm, const Line& line, const Token& t) {
        auto q = tm.find_state(t.text);
        if (!q) throw ParseError(line.number, t.column, "unknown state '" + t.text + "'");
        return *q;
    }

    SymbolId symbol(const TuringMachine& tm, const Line& line, const Token& t) {
        auto z = tm.find_symbol(t.text);
        if (!z) throw ParseError(line.number, t.column, "unknown symbol '" + t.text + "'");
        return *z;
    }

    std::string_view text_;
    std::map<std::string, Line> decls_;
    std::vector<Line> deltas_;
    std::size_t total_lines_ = 0;
};

}  // namespace

TuringMachine parse_machine(std::string_view text) { return Parser(text).parse(); }

TuringMachine load_machine(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_machine(buf.str());
}

std::string render_machine(const TuringMachine& tm) {
    std::string out = "states:";
    for (StateId q : tm.states()) out += " " + tm.state_name(q);
    out += "\nstart: " + tm.state_name(tm.start());
    out += "\naccept: " + tm.state_name(tm.accept());
    out += "\nreject: " + tm.state_name(tm.reject());
    out += "\ninput_alphabet:";
    for (SymbolId z : tm.input_alphabet()) out += " " + tm.symbol_name(z);
    out += "\ntape_alphabet:";
    for (SymbolId z : tm.tape_alphabet())
        if (z != kEndMarker && z != kBlank) out += " " + tm.symbol_name(z);
    out += "\n";
    for (StateId q : tm.states()) {
        for (std::uint32_t zi = 0; zi < tm.symbol_count(); ++zi) {
            const auto& a = tm.transition(q, SymbolId{zi});
            if (!a) continue;
            out += "delta: " + tm.state_name(q) + " " + tm.symbol_name(SymbolId{zi}) + " -> " +
                   tm.state_name(a->next) + " " + tm.symbol_name(a->write) + " " +
                   (a->move == Move::Left ? "L" : "R") + "\n";
        }
    }
    return out;
}

}  // namespace ptm
