#include "cantorlab/measure_io.hpp"

#include <cctype>
#include <memory>
#include <sstream>
#include <variant>
#include <vector>

namespace cantorlab {

namespace {

// ---- document model ------------------------------------------------------

struct Block;
using Value = std::variant<std::string, std::shared_ptr<Block>>;

struct Block {
    std::vector<std::pair<std::string, Value>> entries;

    const Value* find(const std::string& key) const {
        for (const auto& [k, v] : entries)
            if (k == key) return &v;
        return nullptr;
    }
    const std::string& atom(const std::string& key) const {
        const Value* v = find(key);
        if (!v || !std::holds_alternative<std::string>(*v))
            throw ParseError("missing or non-atom key '" + key + "'");
        return std::get<std::string>(*v);
    }
    const Block& block(const std::string& key) const {
        const Value* v = find(key);
        if (!v || !std::holds_alternative<std::shared_ptr<Block>>(*v))
            throw ParseError("missing or non-block key '" + key + "'");
        return *std::get<std::shared_ptr<Block>>(*v);
    }
};

// ---- tokenizer -----------------------------------------------------------

struct Token {
    enum Type { LBrace, RBrace, Atom, Quoted, End } type;
    std::string text;
};

class Lexer {
  public:
    explicit Lexer(const std::string& s) : s_(s) {}
    Token next() {
        while (pos_ < s_.size() && (std::isspace(static_cast<unsigned char>(s_[pos_])) ||
                                    s_[pos_] == '#')) {
            if (s_[pos_] == '#') {  // comment to end of line
                while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
            } else {
                ++pos_;
            }
        }
        if (pos_ >= s_.size()) return {Token::End, ""};
        char c = s_[pos_];
        if (c == '{') { ++pos_; return {Token::LBrace, "{"}; }
        if (c == '}') { ++pos_; return {Token::RBrace, "}"}; }
        if (c == '"') {
            size_t end = s_.find('"', pos_ + 1);
            if (end == std::string::npos) throw ParseError("unterminated string");
            std::string text = s_.substr(pos_ + 1, end - pos_ - 1);
            pos_ = end + 1;
            return {Token::Quoted, text};
        }
        size_t start = pos_;
        while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) &&
               s_[pos_] != '{' && s_[pos_] != '}' && s_[pos_] != '"')
            ++pos_;
        return {Token::Atom, s_.substr(start, pos_ - start)};
    }

  private:
    const std::string& s_;
    size_t pos_ = 0;
};

std::shared_ptr<Block> parse_block(Lexer& lex) {
    auto block = std::make_shared<Block>();
    for (;;) {
        Token key = lex.next();
        if (key.type == Token::RBrace) return block;
        if (key.type != Token::Atom) throw ParseError("expected key, got '" + key.text + "'");
        Token val = lex.next();
        switch (val.type) {
            case Token::LBrace:
                block->entries.emplace_back(key.text, parse_block(lex));
                break;
            case Token::Atom:
            case Token::Quoted:
                block->entries.emplace_back(key.text, val.text);
                break;
            default:
                throw ParseError("expected value for key '" + key.text + "'");
        }
    }
}

// ---- interpretation ------------------------------------------------------

SequenceSpec read_sequence(const Block& b) {
    const std::string& kind = b.atom("kind");
    if (kind == "periodic")
        return SequenceSpec::periodic(BitString(b.atom("preamble")),
                                      BitString(b.atom("period")));
    if (kind == "pseudo-random")
        return SequenceSpec::pseudo_random(BitString(b.atom("prefix")),
                                           std::stoull(b.atom("seed")));
    throw ParseError("unknown sequence kind: " + kind);
}

MeasureSpec read_measure(const Block& b) {
    const std::string& kind = b.atom("kind");
    if (kind == "uniform") return MeasureSpec::uniform();
    if (kind == "bernoulli") return MeasureSpec::bernoulli(Rational::parse(b.atom("p")));
    if (kind == "markov") {
        std::array<Rational, 2> init{Rational::parse(b.atom("init0")),
                                     Rational::parse(b.atom("init1"))};
        std::array<std::array<Rational, 2>, 2> trans{
            {{Rational::parse(b.atom("t00")), Rational::parse(b.atom("t01"))},
             {Rational::parse(b.atom("t10")), Rational::parse(b.atom("t11"))}}};
        return MeasureSpec::markov(init, trans);
    }
    if (kind == "dirac") return MeasureSpec::dirac(read_sequence(b.block("sequence")));
    if (kind == "convex") {
        std::vector<std::pair<Rational, MeasureSpec>> terms;
        for (const auto& [k, v] : b.entries) {
            if (k != "term") continue;
            const Block& t = *std::get<std::shared_ptr<Block>>(v);
            terms.emplace_back(Rational::parse(t.atom("weight")),
                               read_measure(t.block("measure")));
        }
        return MeasureSpec::convex(std::move(terms));
    }
    if (kind == "localize")
        return MeasureSpec::localize(read_measure(b.block("child")), BitString(b.atom("at")));
    if (kind == "product")
        return MeasureSpec::product(read_measure(b.block("left")),
                                    read_measure(b.block("right")));
    if (kind == "pushforward")
        return MeasureSpec::pushforward(TTReduction::by_name(b.atom("reduction")),
                                        read_measure(b.block("source")));
    if (kind == "sigma-mixture") return MeasureSpec::sigma_mixture();
    if (kind == "slow-growth")
        return MeasureSpec::slow_growth(std::stoull(b.atom("seed")));
    if (kind == "trivial-mixture") return MeasureSpec::trivial_mixture();
    if (kind == "renewal") return MeasureSpec::renewal(std::stoi(b.atom("truncation")));
    throw ParseError("unknown measure kind: " + kind);
}

// ---- printing ------------------------------------------------------------

void indent(std::ostream& os, int depth) {
    for (int i = 0; i < depth; ++i) os << "  ";
}

void print_sequence(std::ostream& os, const SequenceSpec& s, int depth) {
    os << "{\n";
    if (s.kind() == SequenceSpec::Kind::EventuallyPeriodic) {
        indent(os, depth + 1); os << "kind periodic\n";
        indent(os, depth + 1); os << "preamble \"" << s.preamble().str() << "\"\n";
        indent(os, depth + 1); os << "period \"" << s.period().str() << "\"\n";
    } else {
        indent(os, depth + 1); os << "kind pseudo-random\n";
        indent(os, depth + 1); os << "prefix \"" << s.preamble().str() << "\"\n";
        indent(os, depth + 1); os << "seed " << s.seed() << "\n";
    }
    indent(os, depth); os << "}";
}

void print_node(std::ostream& os, const MeasureSpec& m, int depth) {
    using Kind = MeasureSpec::Kind;
    os << "{\n";
    auto line = [&](auto&&... parts) {
        indent(os, depth + 1);
        (os << ... << parts);
        os << "\n";
    };
    switch (m.kind()) {
        case Kind::Uniform: line("kind uniform"); break;
        case Kind::Bernoulli: line("kind bernoulli"); line("p ", m.bernoulli_p().str()); break;
        case Kind::Markov: {
            line("kind markov");
            line("init0 ", m.markov_initial()[0].str());
            line("init1 ", m.markov_initial()[1].str());
            const auto& t = m.markov_transition();
            line("t00 ", t[0][0].str());
            line("t01 ", t[0][1].str());
            line("t10 ", t[1][0].str());
            line("t11 ", t[1][1].str());
            break;
        }
        case Kind::Dirac: {
            line("kind dirac");
            indent(os, depth + 1);
            os << "sequence ";
            print_sequence(os, m.dirac_seq(), depth + 1);
            os << "\n";
            break;
        }
        case Kind::Convex: {
            line("kind convex");
            for (const auto& [w, child] : m.convex_terms()) {
                indent(os, depth + 1);
                os << "term {\n";
                indent(os, depth + 2);
                os << "weight " << w.str() << "\n";
                indent(os, depth + 2);
                os << "measure ";
                print_node(os, child, depth + 2);
                os << "\n";
                indent(os, depth + 1);
                os << "}\n";
            }
            break;
        }
        case Kind::Localize: {
            line("kind localize");
            line("at \"", m.localize_at().str(), "\"");
            indent(os, depth + 1);
            os << "child ";
            print_node(os, m.localize_child(), depth + 1);
            os << "\n";
            break;
        }
        case Kind::Product: {
            line("kind product");
            indent(os, depth + 1);
            os << "left ";
            print_node(os, m.product_left(), depth + 1);
            os << "\n";
            indent(os, depth + 1);
            os << "right ";
            print_node(os, m.product_right(), depth + 1);
            os << "\n";
            break;
        }
        case Kind::Pushforward: {
            line("kind pushforward");
            line("reduction ", m.pushforward_reduction().name);
            indent(os, depth + 1);
            os << "source ";
            print_node(os, m.pushforward_source(), depth + 1);
            os << "\n";
            break;
        }
        case Kind::SigmaMixture: line("kind sigma-mixture"); break;
        case Kind::SlowGrowth:
            line("kind slow-growth");
            line("seed ", m.slow_growth_seed());
            break;
        case Kind::TrivialMixture: line("kind trivial-mixture"); break;
        case Kind::Renewal:
            line("kind renewal");
            line("truncation ", m.renewal_truncation());
            break;
    }
    indent(os, depth);
    os << "}";
}

}  // namespace

std::string print_measure(const MeasureSpec& spec) {
    std::ostringstream os;
    os << "measure ";
    print_node(os, spec, 0);
    os << "\n";
    return os.str();
}

MeasureSpec parse_measure(const std::string& text) {
    Lexer lex(text);
    Token t = lex.next();
    if (t.type != Token::Atom || t.text != "measure")
        throw ParseError("expected 'measure' block");
    Token brace = lex.next();
    if (brace.type != Token::LBrace) throw ParseError("expected '{' after 'measure'");
    auto block = parse_block(lex);
    if (lex.next().type != Token::End) throw ParseError("trailing content");
    return read_measure(*block);
}

}  // namespace cantorlab
