#include <algorithm>
#include <array>

#include "ringlab/identity.hpp"
#include "ringlab/jordan_maps.hpp"
#include "ringlab/parallel.hpp"

namespace ringlab {

namespace {

// Postfix program over a value stack.
struct Op {
    enum class Code : std::uint8_t { Var, Const, Neg, Add, Sub, Mul, Jordan, Apply, Q };
    Code code;
    std::uint32_t arg = 0;  // variable index, constant, map index, or q arity
};

class Compiler {
public:
    Compiler(const FiniteRing& ring, const IdentityAst& ast,
             const std::map<std::string, RingMap>& bindings)
        : ring_(ring), ast_(ast) {
        for (const auto& name : ast.map_symbols) {
            const auto it = bindings.find(name);
            if (it == bindings.end()) throw StructuralError("unbound map symbol '" + name + "'");
            if (it->second.ring().order() != ring.order())
                throw StructuralError("map '" + name + "' is defined on a ring of order " +
                                      std::to_string(it->second.ring().order()) + ", expected " +
                                      std::to_string(ring.order()));
            maps.push_back(&it->second);
        }
    }

    std::vector<Op> compile(const Expr& e) {
        std::vector<Op> program;
        emit(e, program, 1);
        return program;
    }

    std::vector<const RingMap*> maps;
    std::size_t max_depth = 0;

private:
    template <class List>
    static std::uint32_t index_of(const List& list, const std::string& name) {
        return static_cast<std::uint32_t>(std::find(list.begin(), list.end(), name) - list.begin());
    }

    // `depth` is the stack height after this subexpression is pushed.
    void emit(const Expr& e, std::vector<Op>& out, std::size_t depth) {
        using C = Op::Code;
        max_depth = std::max(max_depth, depth);
        switch (e.kind) {
            case Expr::Kind::Variable:
                out.push_back({C::Var, index_of(ast_.variables, e.name)});
                return;
            case Expr::Kind::Zero: out.push_back({C::Const, ring_.zero()}); return;
            case Expr::Kind::One: out.push_back({C::Const, ring_.one()}); return;
            case Expr::Kind::Negate:
                emit(e.args[0], out, depth);
                out.push_back({C::Neg});
                return;
            case Expr::Kind::Apply:
                emit(e.args[0], out, depth);
                out.push_back({C::Apply, index_of(ast_.map_symbols, e.name)});
                return;
            case Expr::Kind::Q:
                for (std::size_t i = 0; i < e.args.size(); ++i) emit(e.args[i], out, depth + i);
                out.push_back({C::Q, static_cast<std::uint32_t>(e.args.size())});
                return;
            default: break;
        }
        emit(e.args[0], out, depth);
        emit(e.args[1], out, depth + 1);
        switch (e.kind) {
            case Expr::Kind::Add: out.push_back({C::Add}); break;
            case Expr::Kind::Subtract: out.push_back({C::Sub}); break;
            case Expr::Kind::Multiply: out.push_back({C::Mul}); break;
            default: out.push_back({C::Jordan}); break;
        }
    }

    const FiniteRing& ring_;
    const IdentityAst& ast_;
};

Elem run(const FiniteRing& R, const std::vector<Op>& program, const std::vector<const RingMap*>& maps,
         const Elem* vars, Elem* stack) {
    using C = Op::Code;
    std::size_t sp = 0;
    for (const Op& op : program) {
        switch (op.code) {
            case C::Var: stack[sp++] = vars[op.arg]; break;
            case C::Const: stack[sp++] = static_cast<Elem>(op.arg); break;
            case C::Neg: stack[sp - 1] = R.neg(stack[sp - 1]); break;
            case C::Apply: stack[sp - 1] = (*maps[op.arg])(stack[sp - 1]); break;
            case C::Add: --sp; stack[sp - 1] = R.add(stack[sp - 1], stack[sp]); break;
            case C::Sub: --sp; stack[sp - 1] = R.sub(stack[sp - 1], stack[sp]); break;
            case C::Mul: --sp; stack[sp - 1] = R.mul(stack[sp - 1], stack[sp]); break;
            case C::Jordan: --sp; stack[sp - 1] = R.jordan(stack[sp - 1], stack[sp]); break;
            case C::Q:
                sp -= op.arg;
                stack[sp] = q_n(R, std::span<const Elem>(stack + sp, op.arg));
                ++sp;
                break;
        }
    }
    return stack[0];
}

}  // namespace

EvalResult eval_identity(const FiniteRing& ring, const IdentityAst& ast,
                         const std::map<std::string, RingMap>& bindings, EvalOptions options) {
    Compiler compiler(ring, ast, bindings);
    const auto lhs = compiler.compile(ast.lhs);
    const auto rhs = compiler.compile(ast.rhs);
    const std::size_t stack_size = compiler.max_depth + 1;
    const std::size_t v = ast.variables.size();
    const std::uint64_t N = ring.order();

    std::uint64_t total = 1;
    for (std::size_t i = 0; i < v; ++i) {
        if (total > UINT64_MAX / N) {
            total = UINT64_MAX;
            break;
        }
        total *= N;
    }
    if (total > options.budget)
        throw BudgetExceeded("identity over " + std::to_string(v) + " variables", total,
                             options.budget);

    // Tasks fix the leading `fixed` variables; the rest are scanned inside a task.
    const std::size_t fixed = std::min<std::size_t>(v, 2);
    std::size_t tasks = 1;
    for (std::size_t i = 0; i < fixed; ++i) tasks *= N;
    std::uint64_t inner = 1;
    for (std::size_t i = fixed; i < v; ++i) inner *= N;

    const auto& maps = compiler.maps;
    auto witness = parallel::find_first<std::vector<Elem>>(tasks, options.workers, [&](std::size_t task) {
        std::vector<Elem> vars(v, 0);
        std::vector<Elem> stack(stack_size);
        std::size_t rest = task;
        for (std::size_t i = fixed; i-- > 0;) {
            vars[i] = static_cast<Elem>(rest % N);
            rest /= N;
        }
        for (std::uint64_t k = 0; k < inner; ++k) {
            if (run(ring, lhs, maps, vars.data(), stack.data()) !=
                run(ring, rhs, maps, vars.data(), stack.data()))
                return std::optional<std::vector<Elem>>(vars);
            for (std::size_t i = v; i-- > fixed;) {
                if (vars[i] + 1u < N) {
                    ++vars[i];
                    break;
                }
                vars[i] = 0;
            }
        }
        return std::optional<std::vector<Elem>>();
    });

    EvalResult result;
    result.assignments = total;
    if (witness) {
        result.holds = false;
        result.counterexample = std::move(*witness);
    }
    return result;
}

}  // namespace ringlab
