#include "ltlgrid/lasso.hpp"

#include <stdexcept>

namespace ltlgrid {

namespace {

using Bits = std::vector<char>;

struct Evaluator {
    const LassoWord& w;
    std::size_t len;

    std::size_t next(std::size_t i) const {
        return i + 1 < len ? i + 1 : w.prefix.size();
    }

    const Symbol& at(std::size_t i) const {
        return i < w.prefix.size() ? w.prefix[i] : w.cycle[i - w.prefix.size()];
    }

    Bits eval(const FormulaPtr& f) {
        switch (f->op) {
            case Op::True: return Bits(len, 1);
            case Op::Atom: {
                Bits v(len);
                for (std::size_t i = 0; i < len; ++i) v[i] = at(i).contains(f->atom);
                return v;
            }
            case Op::Not: {
                Bits v = eval(f->left);
                for (auto& b : v) b = !b;
                return v;
            }
            case Op::And: {
                Bits a = eval(f->left), b = eval(f->right);
                for (std::size_t i = 0; i < len; ++i) a[i] = a[i] && b[i];
                return a;
            }
            case Op::Or: {
                Bits a = eval(f->left), b = eval(f->right);
                for (std::size_t i = 0; i < len; ++i) a[i] = a[i] || b[i];
                return a;
            }
            case Op::Implies: {
                Bits a = eval(f->left), b = eval(f->right);
                for (std::size_t i = 0; i < len; ++i) a[i] = !a[i] || b[i];
                return a;
            }
            case Op::Until: {
                Bits a = eval(f->left), b = eval(f->right);
                return least_fixpoint(
                    [&](const Bits& v, std::size_t i) { return b[i] || (a[i] && v[next(i)]); });
            }
            case Op::Eventually: {
                Bits a = eval(f->left);
                return least_fixpoint(
                    [&](const Bits& v, std::size_t i) { return a[i] || v[next(i)]; });
            }
            case Op::Always: {
                Bits a = eval(f->left);
                return greatest_fixpoint(
                    [&](const Bits& v, std::size_t i) { return a[i] && v[next(i)]; });
            }
        }
        return Bits(len, 0);
    }

    template <typename Step>
    Bits least_fixpoint(Step step) {
        Bits v(len, 0);
        iterate(v, step);
        return v;
    }

    template <typename Step>
    Bits greatest_fixpoint(Step step) {
        Bits v(len, 1);
        iterate(v, step);
        return v;
    }

    template <typename Step>
    void iterate(Bits& v, Step step) {
        for (std::size_t sweep = 0; sweep <= len; ++sweep) {
            bool changed = false;
            for (std::size_t k = len; k-- > 0;) {
                const char nv = step(v, k);
                if (nv != v[k]) {
                    v[k] = nv;
                    changed = true;
                }
            }
            if (!changed) return;
        }
    }
};

}  // namespace

bool eval_lasso(const FormulaPtr& f, const LassoWord& w) {
    if (w.cycle.empty()) throw std::invalid_argument("eval_lasso: cycle must be nonempty");
    Evaluator ev{w, w.fold_length()};
    return ev.eval(f)[0] != 0;
}

}  // namespace ltlgrid
