#include "mj/interp.hpp"

#include <cstdint>
#include <memory>
#include <unordered_map>

#include "mj/checker.hpp"
#include "mj/messages.hpp"
#include "mj/printer.hpp"

namespace mj {

const char* runtime_error_str(RuntimeErrorType t) {
    switch (t) {
    case RuntimeErrorType::AssertionFailure: return "AssertionFailure";
    case RuntimeErrorType::ComparisonFailure: return "ComparisonFailure";
    case RuntimeErrorType::NullDereference: return "NullDereference";
    case RuntimeErrorType::IndexOutOfBounds: return "IndexOutOfBounds";
    case RuntimeErrorType::DivisionByZero: return "DivisionByZero";
    case RuntimeErrorType::StepLimitExceeded: return "StepLimitExceeded";
    }
    return "?";
}

namespace {

struct ArrayVal;
struct ObjectVal;

struct Value {
    enum class Kind { Int, Long, Float, Double, Bool, String, Array, Object, Null } kind =
        Kind::Null;
    long long i = 0;
    double d = 0.0;
    bool b = false;
    std::string s;
    std::shared_ptr<ArrayVal> arr;
    std::shared_ptr<ObjectVal> obj;

    bool is_null() const { return kind == Kind::Null; }
    bool is_int_family() const { return kind == Kind::Int || kind == Kind::Long; }
    bool is_float_family() const { return kind == Kind::Float || kind == Kind::Double; }
};

struct ArrayVal {
    std::vector<Value> elems;
};

struct ObjectVal {
    const ClassDecl* cls = nullptr;
    std::unordered_map<std::string, Value> fields;
};

struct Fault {
    RuntimeErrorType type;
    std::string message;
};

Value default_value(const MjType& t) {
    Value v;
    switch (t.base()) {
    case MjType::Base::Int: v.kind = Value::Kind::Int; break;
    case MjType::Base::Long: v.kind = Value::Kind::Long; break;
    case MjType::Base::Float: v.kind = Value::Kind::Float; break;
    case MjType::Base::Double: v.kind = Value::Kind::Double; break;
    case MjType::Base::Bool: v.kind = Value::Kind::Bool; break;
    default: v.kind = Value::Kind::Null; break; // string, class, array default to null
    }
    return v;
}

// Widens a value to the declared static type (int literals into long slots,
// float into double). Everything else is stored as-is.
Value coerce(Value v, const MjType& to) {
    if (to.base() == MjType::Base::Long && v.kind == Value::Kind::Int) v.kind = Value::Kind::Long;
    if (to.base() == MjType::Base::Double && v.kind == Value::Kind::Float)
        v.kind = Value::Kind::Double;
    return v;
}

std::string render_value(const Value& v) {
    switch (v.kind) {
    case Value::Kind::Int:
    case Value::Kind::Long: return std::to_string(v.i);
    case Value::Kind::Float:
    case Value::Kind::Double: return format_double(v.d);
    case Value::Kind::Bool: return v.b ? "true" : "false";
    case Value::Kind::String: return v.s;
    case Value::Kind::Array: {
        std::string out = "[";
        for (std::size_t i = 0; i < v.arr->elems.size(); ++i) {
            if (i > 0) out += ", ";
            out += render_value(v.arr->elems[i]);
        }
        return out + "]";
    }
    case Value::Kind::Object: return v.obj->cls->name;
    case Value::Kind::Null: return "null";
    }
    return "?";
}

long long wrap_add(long long a, long long b) {
    return static_cast<long long>(static_cast<unsigned long long>(a) +
                                  static_cast<unsigned long long>(b));
}
long long wrap_sub(long long a, long long b) {
    return static_cast<long long>(static_cast<unsigned long long>(a) -
                                  static_cast<unsigned long long>(b));
}
long long wrap_mul(long long a, long long b) {
    return static_cast<long long>(static_cast<unsigned long long>(a) *
                                  static_cast<unsigned long long>(b));
}
long long wrap_neg(long long a) {
    return static_cast<long long>(-static_cast<unsigned long long>(a));
}

class Interp {
public:
    Interp(const Ast& ast, const ExecLimits& limits) : ast_(ast), limits_(limits) {}

    TestOutcome run_test(const ClassDecl& cls, const MethodDecl& test) {
        TestOutcome out;
        out.test_name = test.name;
        steps_ = 0;
        depth_ = 0;
        active_assert_ = nullptr;
        try {
            Value self = instantiate(cls, {});
            std::vector<Value> no_args;
            call_method(self, test, no_args);
            out.passed = true;
        } catch (const Fault& f) {
            out.passed = false;
            out.error_type = f.type;
            out.error_message = f.message;
            if (active_assert_) out.failing_assertion = print_stmt_inline(*active_assert_);
        }
        return out;
    }

private:
    const Ast& ast_;
    const ExecLimits& limits_;
    long long steps_ = 0;
    int depth_ = 0;
    const Stmt* active_assert_ = nullptr;

    struct Env {
        Value self;
        std::vector<std::vector<std::pair<std::string, Value>>> scopes;

        Value* find(const std::string& name) {
            for (auto it = scopes.rbegin(); it != scopes.rend(); ++it)
                for (auto& [n, v] : *it)
                    if (n == name) return &v;
            return nullptr;
        }
    };

    enum class Flow { Normal, Returned };

    void charge(long long n = 1) {
        if (n > limits_.step_budget) n = limits_.step_budget + 1;
        steps_ += n;
        if (steps_ > limits_.step_budget)
            throw Fault{RuntimeErrorType::StepLimitExceeded, msg::step_limit_exceeded()};
    }

    [[noreturn]] void null_fault() {
        throw Fault{RuntimeErrorType::NullDereference, msg::null_dereference()};
    }

    Value instantiate(const ClassDecl& cls, const std::vector<Value>& args) {
        Value v;
        v.kind = Value::Kind::Object;
        v.obj = std::make_shared<ObjectVal>();
        v.obj->cls = &cls;
        for (const auto& f : cls.fields) v.obj->fields[f.name] = default_value(f.type);
        if (cls.ctor && args.size() == cls.ctor->params.size()) {
            if (++depth_ > limits_.max_call_depth)
                throw Fault{RuntimeErrorType::StepLimitExceeded, msg::step_limit_exceeded()};
            Env env;
            env.self = v;
            env.scopes.emplace_back();
            for (std::size_t i = 0; i < args.size(); ++i)
                env.scopes.back().emplace_back(cls.ctor->params[i].name,
                                               coerce(args[i], cls.ctor->params[i].type));
            Value ret;
            exec_block(*cls.ctor->body, env, ret);
            --depth_;
        }
        return v;
    }

    Value call_method(const Value& self, const MethodDecl& m, std::vector<Value>& args) {
        if (++depth_ > limits_.max_call_depth)
            throw Fault{RuntimeErrorType::StepLimitExceeded, msg::step_limit_exceeded()};
        Env env;
        env.self = self;
        env.scopes.emplace_back();
        for (std::size_t i = 0; i < args.size(); ++i)
            env.scopes.back().emplace_back(m.params[i].name, coerce(args[i], m.params[i].type));
        Value ret;
        exec_block(*m.body, env, ret);
        --depth_;
        if (m.return_type) ret = coerce(ret, *m.return_type);
        return ret;
    }

    Flow exec_block(const Block& b, Env& env, Value& ret) {
        env.scopes.emplace_back();
        for (const auto& s : b.stmts) {
            if (exec_stmt(*s, env, ret) == Flow::Returned) {
                env.scopes.pop_back();
                return Flow::Returned;
            }
        }
        env.scopes.pop_back();
        return Flow::Normal;
    }

    Flow exec_stmt(const Stmt& s, Env& env, Value& ret) {
        charge();
        switch (s.kind) {
        case StmtKind::VarDecl: {
            Value v = s.init ? eval(*s.init, env) : default_value(s.decl_type);
            env.scopes.back().emplace_back(s.name, coerce(std::move(v), s.decl_type));
            return Flow::Normal;
        }
        case StmtKind::Assign: {
            Value v = eval(*s.init, env);
            assign(*s.lvalue, std::move(v), env);
            return Flow::Normal;
        }
        case StmtKind::If: {
            Value c = eval(*s.cond, env);
            if (c.b) return exec_block(*s.body, env, ret);
            if (s.else_body) return exec_block(*s.else_body, env, ret);
            return Flow::Normal;
        }
        case StmtKind::While: {
            while (true) {
                charge();
                Value c = eval(*s.cond, env);
                if (!c.b) return Flow::Normal;
                if (exec_block(*s.body, env, ret) == Flow::Returned) return Flow::Returned;
            }
        }
        case StmtKind::For: {
            env.scopes.emplace_back();
            Flow flow = Flow::Normal;
            if (s.for_init) exec_stmt(*s.for_init, env, ret);
            while (true) {
                charge();
                if (s.cond) {
                    Value c = eval(*s.cond, env);
                    if (!c.b) break;
                }
                if (exec_block(*s.body, env, ret) == Flow::Returned) {
                    flow = Flow::Returned;
                    break;
                }
                if (s.for_update) exec_stmt(*s.for_update, env, ret);
            }
            env.scopes.pop_back();
            return flow;
        }
        case StmtKind::Return:
            if (s.init) ret = eval(*s.init, env);
            return Flow::Returned;
        case StmtKind::ExprStmt:
            eval(*s.init, env);
            return Flow::Normal;
        case StmtKind::Assert: {
            const Stmt* prev = active_assert_;
            active_assert_ = &s;
            if (s.assert_kind == AssertKind::True) {
                Value v = eval(*s.args[0], env);
                if (!v.b)
                    throw Fault{RuntimeErrorType::AssertionFailure, msg::assertion_failed()};
            } else {
                Value expected = eval(*s.args[0], env);
                Value actual = eval(*s.args[1], env);
                if (!values_equal(expected, actual))
                    throw Fault{RuntimeErrorType::ComparisonFailure,
                                msg::comparison_failure(render_value(expected),
                                                        render_value(actual))};
            }
            active_assert_ = prev;
            return Flow::Normal;
        }
        }
        return Flow::Normal;
    }

    void assign(const Expr& lv, Value v, Env& env) {
        switch (lv.kind) {
        case ExprKind::VarRef: {
            if (Value* slot = env.find(lv.name)) {
                *slot = std::move(v);
                return;
            }
            // Field of this.
            if (env.self.kind == Value::Kind::Object) {
                auto it = env.self.obj->fields.find(lv.name);
                if (it != env.self.obj->fields.end()) {
                    it->second = std::move(v);
                    return;
                }
            }
            null_fault();
        }
        case ExprKind::FieldAccess: {
            Value recv = eval(*lv.recv, env);
            if (recv.is_null()) null_fault();
            recv.obj->fields[lv.name] = std::move(v);
            return;
        }
        case ExprKind::Index: {
            Value arr = eval(*lv.lhs, env);
            Value idx = eval(*lv.rhs, env);
            if (arr.is_null()) null_fault();
            long long i = idx.i;
            long long n = static_cast<long long>(arr.arr->elems.size());
            if (i < 0 || i >= n)
                throw Fault{RuntimeErrorType::IndexOutOfBounds, msg::index_out_of_bounds(i, n)};
            arr.arr->elems[static_cast<std::size_t>(i)] = std::move(v);
            return;
        }
        default:
            null_fault();
        }
    }

    static bool values_equal(const Value& a, const Value& b) {
        if (a.is_null() || b.is_null()) return a.is_null() && b.is_null();
        if (a.is_int_family() && b.is_int_family()) return a.i == b.i;
        if (a.is_float_family() && b.is_float_family()) return a.d == b.d;
        if (a.kind == Value::Kind::Bool && b.kind == Value::Kind::Bool) return a.b == b.b;
        if (a.kind == Value::Kind::String && b.kind == Value::Kind::String) return a.s == b.s;
        if (a.kind == Value::Kind::Array && b.kind == Value::Kind::Array) return a.arr == b.arr;
        if (a.kind == Value::Kind::Object && b.kind == Value::Kind::Object) return a.obj == b.obj;
        return false;
    }

    Value eval(const Expr& e, Env& env) {
        charge();
        switch (e.kind) {
        case ExprKind::IntLit: {
            Value v;
            v.kind = Value::Kind::Int;
            v.i = e.int_val;
            return v;
        }
        case ExprKind::LongLit: {
            Value v;
            v.kind = Value::Kind::Long;
            v.i = e.int_val;
            return v;
        }
        case ExprKind::FloatLit: {
            Value v;
            v.kind = Value::Kind::Float;
            v.d = e.float_val;
            return v;
        }
        case ExprKind::DoubleLit: {
            Value v;
            v.kind = Value::Kind::Double;
            v.d = e.float_val;
            return v;
        }
        case ExprKind::BoolLit: {
            Value v;
            v.kind = Value::Kind::Bool;
            v.b = e.bool_val;
            return v;
        }
        case ExprKind::StringLit: {
            Value v;
            v.kind = Value::Kind::String;
            v.s = e.str_val;
            return v;
        }
        case ExprKind::NullLit:
            return Value{};
        case ExprKind::This:
            return env.self;
        case ExprKind::VarRef: {
            if (Value* slot = env.find(e.name)) return *slot;
            if (env.self.kind == Value::Kind::Object) {
                auto it = env.self.obj->fields.find(e.name);
                if (it != env.self.obj->fields.end()) return it->second;
            }
            null_fault();
        }
        case ExprKind::Unary: {
            Value v = eval(*e.lhs, env);
            if (e.uop == UnOp::Not) {
                v.b = !v.b;
                return v;
            }
            if (v.is_int_family()) v.i = wrap_neg(v.i);
            else v.d = -v.d;
            return v;
        }
        case ExprKind::Binary:
            return eval_binary(e, env);
        case ExprKind::FieldAccess: {
            Value recv = eval(*e.recv, env);
            if (recv.is_null()) null_fault();
            if (e.name == "length") {
                if (recv.kind == Value::Kind::Array) {
                    Value v;
                    v.kind = Value::Kind::Int;
                    v.i = static_cast<long long>(recv.arr->elems.size());
                    return v;
                }
                if (recv.kind == Value::Kind::String) {
                    Value v;
                    v.kind = Value::Kind::Int;
                    v.i = static_cast<long long>(recv.s.size());
                    return v;
                }
            }
            auto it = recv.obj->fields.find(e.name);
            if (it == recv.obj->fields.end()) null_fault();
            return it->second;
        }
        case ExprKind::Index: {
            Value base = eval(*e.lhs, env);
            Value idx = eval(*e.rhs, env);
            if (base.is_null()) null_fault();
            long long i = idx.i;
            if (base.kind == Value::Kind::String) {
                long long n = static_cast<long long>(base.s.size());
                if (i < 0 || i >= n)
                    throw Fault{RuntimeErrorType::IndexOutOfBounds, msg::index_out_of_bounds(i, n)};
                Value v;
                v.kind = Value::Kind::String;
                v.s = std::string(1, base.s[static_cast<std::size_t>(i)]);
                return v;
            }
            long long n = static_cast<long long>(base.arr->elems.size());
            if (i < 0 || i >= n)
                throw Fault{RuntimeErrorType::IndexOutOfBounds, msg::index_out_of_bounds(i, n)};
            return base.arr->elems[static_cast<std::size_t>(i)];
        }
        case ExprKind::Call: {
            Value self = e.recv ? eval(*e.recv, env) : env.self;
            if (self.is_null()) null_fault();
            const ClassDecl* cls = self.obj->cls;
            const MethodDecl* m = find_method(*cls, e.name);
            if (!m) null_fault();
            std::vector<Value> args;
            args.reserve(e.args.size());
            for (const auto& a : e.args) args.push_back(eval(*a, env));
            return call_method(self, *m, args);
        }
        case ExprKind::New: {
            const ClassDecl* cls = find_class(ast_, e.name);
            if (!cls) null_fault();
            std::vector<Value> args;
            args.reserve(e.args.size());
            for (const auto& a : e.args) args.push_back(eval(*a, env));
            return instantiate(*cls, args);
        }
        case ExprKind::NewArray: {
            Value n = eval(*e.lhs, env);
            if (n.i < 0)
                throw Fault{RuntimeErrorType::IndexOutOfBounds,
                            msg::index_out_of_bounds(n.i, 0)};
            charge(n.i); // allocation cost, keeps memory within the step budget
            Value v;
            v.kind = Value::Kind::Array;
            v.arr = std::make_shared<ArrayVal>();
            v.arr->elems.assign(static_cast<std::size_t>(n.i), default_value(e.decl_type));
            return v;
        }
        }
        return Value{};
    }

    Value eval_binary(const Expr& e, Env& env) {
        // Short-circuit logical operators evaluate lazily.
        if (e.op == BinOp::And || e.op == BinOp::Or) {
            Value l = eval(*e.lhs, env);
            if (e.op == BinOp::And && !l.b) return l;
            if (e.op == BinOp::Or && l.b) return l;
            return eval(*e.rhs, env);
        }

        Value l = eval(*e.lhs, env);
        Value r = eval(*e.rhs, env);

        auto bool_val = [](bool b) {
            Value v;
            v.kind = Value::Kind::Bool;
            v.b = b;
            return v;
        };

        switch (e.op) {
        case BinOp::Eq: return bool_val(values_equal(l, r));
        case BinOp::Ne: return bool_val(!values_equal(l, r));
        case BinOp::Lt:
        case BinOp::Le:
        case BinOp::Gt:
        case BinOp::Ge: {
            bool res;
            if (l.is_int_family() && r.is_int_family()) {
                res = e.op == BinOp::Lt   ? l.i < r.i
                      : e.op == BinOp::Le ? l.i <= r.i
                      : e.op == BinOp::Gt ? l.i > r.i
                                          : l.i >= r.i;
            } else {
                res = e.op == BinOp::Lt   ? l.d < r.d
                      : e.op == BinOp::Le ? l.d <= r.d
                      : e.op == BinOp::Gt ? l.d > r.d
                                          : l.d >= r.d;
            }
            return bool_val(res);
        }
        case BinOp::Add:
            if (l.kind == Value::Kind::String || r.kind == Value::Kind::String) {
                if (l.is_null() || r.is_null()) null_fault();
                charge(static_cast<long long>(l.s.size() + r.s.size()));
                Value v;
                v.kind = Value::Kind::String;
                v.s = l.s + r.s;
                return v;
            }
            [[fallthrough]];
        case BinOp::Sub:
        case BinOp::Mul: {
            if ((l.is_null() || r.is_null()))
                null_fault(); // string slot holding null reached an arithmetic op
            Value v;
            if (l.is_int_family() && r.is_int_family()) {
                v.kind = (l.kind == Value::Kind::Long || r.kind == Value::Kind::Long)
                             ? Value::Kind::Long
                             : Value::Kind::Int;
                v.i = e.op == BinOp::Add   ? wrap_add(l.i, r.i)
                      : e.op == BinOp::Sub ? wrap_sub(l.i, r.i)
                                           : wrap_mul(l.i, r.i);
            } else {
                v.kind = (l.kind == Value::Kind::Double || r.kind == Value::Kind::Double)
                             ? Value::Kind::Double
                             : Value::Kind::Float;
                v.d = e.op == BinOp::Add ? l.d + r.d : e.op == BinOp::Sub ? l.d - r.d : l.d * r.d;
            }
            return v;
        }
        case BinOp::Div:
        case BinOp::Mod: {
            if (l.is_null() || r.is_null()) null_fault();
            Value v;
            if (l.is_int_family() && r.is_int_family()) {
                if (r.i == 0)
                    throw Fault{RuntimeErrorType::DivisionByZero, msg::division_by_zero()};
                v.kind = (l.kind == Value::Kind::Long || r.kind == Value::Kind::Long)
                             ? Value::Kind::Long
                             : Value::Kind::Int;
                if (l.i == INT64_MIN && r.i == -1) {
                    v.i = e.op == BinOp::Div ? INT64_MIN : 0;
                } else {
                    v.i = e.op == BinOp::Div ? l.i / r.i : l.i % r.i;
                }
            } else {
                v.kind = (l.kind == Value::Kind::Double || r.kind == Value::Kind::Double)
                             ? Value::Kind::Double
                             : Value::Kind::Float;
                v.d = l.d / r.d; // IEEE semantics, no fault for float division
            }
            return v;
        }
        default:
            return Value{};
        }
    }
};

} // namespace

std::vector<TestOutcome> run_tests_unchecked(const Ast& ast, const ExecLimits& limits) {
    std::vector<TestOutcome> outcomes;
    for (const auto& cls : ast.classes) {
        for (const auto& m : cls.methods) {
            if (!m.is_test() || m.return_type || !m.params.empty()) continue;
            Interp interp(ast, limits);
            outcomes.push_back(interp.run_test(cls, m));
        }
    }
    return outcomes;
}

std::vector<TestOutcome> run_tests(const Ast& ast, const ExecLimits& limits) {
    if (!check(ast).empty()) throw NotChecked();
    return run_tests_unchecked(ast, limits);
}

std::optional<TestOutcome> first_failure(const std::vector<TestOutcome>& outcomes) {
    for (const auto& o : outcomes)
        if (!o.passed) return o;
    return std::nullopt;
}

} // namespace mj
