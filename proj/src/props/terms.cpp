// Term language for counterexample search.

#include <algorithm>
#include <cctype>
#include <memory>
#include <sstream>

#include "blchang/errors.hpp"
#include "harness.hpp"

namespace blchang {

namespace {

struct Term {
    enum class Op { Var, Zero, One, Neg, Mul, Imp, Join, Meet, Add, PseudoAdd } op;
    std::size_t var = 0;
    std::unique_ptr<Term> lhs, rhs;
};
using TermPtr = std::unique_ptr<Term>;

enum class Rel { Eq, Leq, Lt, Neq };

struct Atom {
    TermPtr lhs, rhs;
    Rel rel;
};

struct Formula {
    std::vector<Atom> hypotheses;
    Atom conclusion;
    std::vector<std::string> vars;
};

// Unicode spellings, rewritten to ASCII before tokenising.
const std::pair<const char*, const char*> kUnicode[] = {
    {"⊗", "*"},  {"⊕", "+"},  {"⊘", "(/)"}, {"→", "->"}, {"∨", "\\/"},
    {"∧", "/\\"}, {"¬", "~"},  {"≤", "<="},  {"≠", "!="}, {"⇒", "=>"},
};

std::string to_ascii(std::string_view text) {
    std::string s(text);
    for (const auto& [from, to] : kUnicode) {
        const std::string f = from;
        for (auto pos = s.find(f); pos != std::string::npos; pos = s.find(f, pos))
            s.replace(pos, f.size(), to);
    }
    return s;
}

class Parser {
  public:
    explicit Parser(std::string text) : s_(std::move(text)) {}

    Formula formula() {
        Formula f;
        std::vector<Atom> atoms;
        atoms.push_back(atom());
        while (eat(";"))
            atoms.push_back(atom());
        if (eat("=>")) {
            f.hypotheses = std::move(atoms);
            f.conclusion = atom();
        } else if (atoms.size() == 1) {
            f.conclusion = std::move(atoms.front());
        } else {
            fail("expected '=>' after hypotheses");
        }
        skip();
        if (i_ != s_.size())
            fail("unexpected input");
        f.vars = vars_;
        return f;
    }

  private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at offset " + std::to_string(i_) + " in '" + s_ + "'");
    }

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
            ++i_;
    }

    bool peek(std::string_view tok) {
        skip();
        return s_.compare(i_, tok.size(), tok) == 0;
    }

    bool eat(std::string_view tok) {
        if (!peek(tok))
            return false;
        i_ += tok.size();
        return true;
    }

    Atom atom() {
        Atom a;
        a.lhs = term();
        if (eat("<="))
            a.rel = Rel::Leq;
        else if (eat("!="))
            a.rel = Rel::Neq;
        else if (peek("=>"))
            fail("expected a relation");
        else if (eat("="))
            a.rel = Rel::Eq;
        else if (eat("<"))
            a.rel = Rel::Lt;
        else
            fail("expected a relation");
        a.rhs = term();
        return a;
    }

    static TermPtr node(Term::Op op, TermPtr l, TermPtr r = nullptr) {
        auto t = std::make_unique<Term>();
        t->op = op;
        t->lhs = std::move(l);
        t->rhs = std::move(r);
        return t;
    }

    TermPtr term() {
        auto l = join();
        if (eat("->"))
            return node(Term::Op::Imp, std::move(l), term());
        return l;
    }

    TermPtr join() {
        auto l = meet();
        while (eat("\\/"))
            l = node(Term::Op::Join, std::move(l), meet());
        return l;
    }

    TermPtr meet() {
        auto l = sum();
        while (eat("/\\"))
            l = node(Term::Op::Meet, std::move(l), sum());
        return l;
    }

    TermPtr sum() {
        auto l = prod();
        while (true) {
            if (eat("+"))
                l = node(Term::Op::Add, std::move(l), prod());
            else if (eat("(/)"))
                l = node(Term::Op::PseudoAdd, std::move(l), prod());
            else
                return l;
        }
    }

    TermPtr prod() {
        auto l = unary();
        while (eat("*"))
            l = node(Term::Op::Mul, std::move(l), unary());
        return l;
    }

    TermPtr unary() {
        if (eat("~"))
            return node(Term::Op::Neg, unary());
        if (peek("(/)"))
            fail("missing left operand");
        if (eat("(")) {
            auto t = term();
            if (!eat(")"))
                fail("expected ')'");
            return t;
        }
        skip();
        if (i_ < s_.size() && (s_[i_] == '0' || s_[i_] == '1') &&
            (i_ + 1 == s_.size() || !std::isalnum(static_cast<unsigned char>(s_[i_ + 1])))) {
            auto t = std::make_unique<Term>();
            t->op = s_[i_++] == '0' ? Term::Op::Zero : Term::Op::One;
            return t;
        }
        if (i_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[i_]))) {
            std::size_t j = i_;
            while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
                ++j;
            const std::string name = s_.substr(i_, j - i_);
            i_ = j;
            auto t = std::make_unique<Term>();
            t->op = Term::Op::Var;
            auto it = std::find(vars_.begin(), vars_.end(), name);
            t->var = static_cast<std::size_t>(it - vars_.begin());
            if (it == vars_.end())
                vars_.push_back(name);
            return t;
        }
        fail("expected a term");
    }

    std::string s_;
    std::size_t i_ = 0;
    std::vector<std::string> vars_;
};

Elt eval(const Term& t, const Algebra& A, const std::vector<Elt>& env) {
    switch (t.op) {
    case Term::Op::Var:
        return env[t.var];
    case Term::Op::Zero:
        return A.bottom();
    case Term::Op::One:
        return A.top();
    case Term::Op::Neg:
        return A.neg(eval(*t.lhs, A, env));
    default:
        break;
    }
    const Elt x = eval(*t.lhs, A, env), y = eval(*t.rhs, A, env);
    switch (t.op) {
    case Term::Op::Mul:
        return A.otimes(x, y);
    case Term::Op::Imp:
        return A.imp(x, y);
    case Term::Op::Join:
        return A.join(x, y);
    case Term::Op::Meet:
        return A.meet(x, y);
    case Term::Op::Add:
        return A.add(x, y);
    default:
        return A.pseudo_add(x, y);
    }
}

bool holds(const Atom& a, const Algebra& A, const std::vector<Elt>& env) {
    const Elt x = eval(*a.lhs, A, env), y = eval(*a.rhs, A, env);
    switch (a.rel) {
    case Rel::Eq:
        return x == y;
    case Rel::Leq:
        return A.leq(x, y);
    case Rel::Lt:
        return x != y && A.leq(x, y);
    default:
        return x != y;
    }
}

} // namespace

Counterexample find_counterexample(std::string_view formula, const std::vector<AlgebraPtr>& corpus,
                                   std::size_t samples, std::uint64_t seed) {
    const Formula f = Parser(to_ascii(formula)).formula();
    Counterexample out;
    const std::size_t arity = std::max<std::size_t>(f.vars.size(), 1);
    for (const auto& A : corpus) {
        if (!A->bounded())
            continue;
        auto src = detail::element_tuples(A, arity, samples, Rng::stream(seed, Rng::salt_of(A->name())));
        out.exhaustive = out.exhaustive && src.exhaustive;
        detail::Case c;
        std::vector<Elt> env;
        while (src.next(c)) {
            ++out.cases;
            env.clear();
            for (const auto& v : c)
                env.push_back(std::get<Elt>(v));
            bool premise = true;
            for (const auto& h : f.hypotheses)
                premise = premise && holds(h, *A, env);
            if (premise && !holds(f.conclusion, *A, env)) {
                out.found = true;
                out.algebra = A->name();
                for (std::size_t i = 0; i < f.vars.size(); ++i)
                    out.assignment.emplace_back(f.vars[i], A->render(env[i]));
                return out;
            }
        }
    }
    return out;
}

std::string Counterexample::render() const {
    std::ostringstream s;
    if (found) {
        s << "counterexample on " << algebra << ":";
        for (const auto& [name, value] : assignment)
            s << " " << name << "=" << value;
        s << " (after " << cases << " cases)";
    } else {
        s << "no counterexample in " << cases << " cases" << (exhaustive ? " (exhaustive)" : " (sampled)");
    }
    return s.str();
}

} // namespace blchang
