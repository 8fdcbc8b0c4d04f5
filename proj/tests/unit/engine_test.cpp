#include "astd/common/errors.hpp"
#include "astd/engine/interpreter.hpp"
#include "engine_fixtures.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

namespace astd::engine {
namespace {

using test::append_to;
using test::increment;
using test::int_attr;
using test::list_attr;
using test::loop;
using test::pattern;
using test::per_user_counter;
using test::qflow_logger;
using test::single;
using test::TreeGen;

const AstdState& child(const AstdState& s, bool left) {
    const auto& f = std::get<FlowState>(s.node);
    return left ? *f.left : *f.right;
}

// --- Value and Env -------------------------------------------------------

TEST(Value, EqualityAndOrderAcrossKinds) {
    EXPECT_EQ(Value(3), Value(std::int64_t{3}));
    EXPECT_NE(Value(3), Value(3.0));
    EXPECT_NE(Value("3"), Value(3));
    EXPECT_TRUE(Value(1) < Value(2));
    EXPECT_TRUE(Value("a") < Value("b"));
    EXPECT_EQ(Value(Value::List{1, "x"}), Value(Value::List{1, "x"}));
    EXPECT_EQ(Value(Value::Map{{"k", 1}}), Value(Value::Map{{"k", 1}}));
}

struct Box final : Object {
    int n = 0;
    std::unique_ptr<Object> clone() const override { return std::make_unique<Box>(*this); }
    std::string_view type_name() const override { return "box"; }
    void describe(std::ostream& out) const override { out << "box(" << n << ")"; }
};

TEST(Value, HandlesCompareByIdentity) {
    const Handle a = Handle::make<Box>();
    const Handle b = Handle::make<Box>();
    EXPECT_EQ(Value(a), Value(a));
    EXPECT_NE(Value(a), Value(b));
}

TEST(Value, MutateDetachesSharedHandle) {
    Handle a = Handle::make<Box>();
    Handle copy = a;
    copy.mutate<Box>().n = 5;
    EXPECT_EQ(a.as<Box>().n, 0);
    EXPECT_EQ(copy.as<Box>().n, 5);
    EXPECT_FALSE(a == copy);
}

TEST(Env, OverrideRestrictSubtract) {
    const Env e{{"a", 1}, {"b", 2}, {"c", 3}};
    const Env o{{"b", 20}, {"d", 4}};
    const Env merged = e.override_with(o);
    EXPECT_EQ(merged.at("b"), Value(20));
    EXPECT_EQ(merged.at("a"), Value(1));
    EXPECT_EQ(merged.size(), 4u);
    EXPECT_EQ(e.restrict_to({"a", "z"}), (Env{{"a", 1}}));
    EXPECT_EQ(e.subtract({"a", "z"}), (Env{{"b", 2}, {"c", 3}}));
}

TEST(Env, AssignRequiresExistingBinding) {
    Env e{{"a", 1}};
    EXPECT_THROW(e.assign("b", 2), Error);
    EXPECT_THROW(e.at("b"), Error);
    e.assign("a", 2);
    EXPECT_EQ(e.at("a"), Value(2));
}

TEST(Env, RestrictionAndSubtractionPartition) {
    test::Gen gen(11);
    for (int trial = 0; trial < 500; ++trial) {
        Env e;
        VarSet vars;
        for (int i = 0; i < 8; ++i) {
            if (gen.chance(0.6)) {
                e.bind("v" + std::to_string(i), gen.integer(0, 9));
            }
            if (gen.chance(0.5)) {
                vars.insert("v" + std::to_string(i));
            }
        }
        const Env in = e.restrict_to(vars);
        const Env out = e.subtract(vars);
        for (const auto& [k, v] : in) {
            EXPECT_FALSE(out.contains(k));
        }
        EXPECT_EQ(in.size() + out.size(), e.size());
        EXPECT_EQ(in.override_with(out), e);
    }
}

// --- patterns ------------------------------------------------------------

TEST(Pattern, BoundAndCaptureSlots) {
    const auto p = pattern("e", {Bound{var("userId")}, Capture{"eventDate", ValueKind::Text},
                                 Capture{"eventId", ValueKind::Text}});
    const Env env{{"userId", "u1"}};
    const auto hit = match(p, {"e", {"u1", "2010-01-04 08:05:00", "id1"}}, env);
    ASSERT_TRUE(hit);
    EXPECT_EQ(hit->at("eventDate"), Value("2010-01-04 08:05:00"));
    EXPECT_EQ(hit->at("eventId"), Value("id1"));
    EXPECT_FALSE(match(p, {"e", {"u2", "d", "id"}}, env));
    EXPECT_FALSE(match(p, {"e", {"u1", 5, "id"}}, env));
    EXPECT_FALSE(match(p, {"e", {"u1", "d"}}, env));
    EXPECT_FALSE(match(p, {"f", {"u1", "d", "id"}}, env));
}

// --- init / final --------------------------------------------------------

TEST(Init, AutomatonWithAttribute) {
    const auto interp = single(loop("A", pattern("e"), increment("c"), {}, {int_attr("c", 0)}));
    const auto s = interp.init();
    EXPECT_EQ(std::get<AutomatonState>(s.node).current, "S0");
    EXPECT_EQ(s.attrs, (Env{{"c", 0}}));
}

TEST(Init, QFlowInstantiatesEveryDomainValue) {
    const auto body = loop("A", pattern("e"), increment("c"), {}, {int_attr("c", 0)});
    const auto interp = single(make_spec("Q", QFlow{"x", {"b", "a"}, body}));
    const auto s = interp.init();
    const auto& q = std::get<QFlowState>(s.node);
    ASSERT_EQ(q.instances.size(), 2u);
    for (const char* key : {"a", "b"}) {
        const auto* inst = find_instance(s, Value(key));
        ASSERT_NE(inst, nullptr);
        EXPECT_EQ(std::get<AutomatonState>(inst->node).current, "S0");
        EXPECT_EQ(inst->attrs, (Env{{"c", 0}}));
    }
}

TEST(Init, UnboundedInterleaveStartsEmpty) {
    const auto interp = single(make_spec("I", QInterleave{"u", std::nullopt, loop("A", pattern("e", {Bound{var("u")}}))}));
    const auto s = interp.init();
    EXPECT_TRUE(std::get<QInterleaveState>(s.node).instances.empty());
    EXPECT_TRUE(interp.is_final(s));
}

TEST(Init, UnresolvedCallIsSpecError) {
    SpecLibrary lib;
    lib.add(make_spec("Root", Call{"Nowhere", {}}));
    EXPECT_THROW(Interpreter(lib, "Root"), SpecError);
}

TEST(Final, FreshInitialFinalAutomaton) {
    EXPECT_TRUE(single(loop("A", pattern("e"))).is_final(single(loop("A", pattern("e"))).init()));
}

TEST(Final, QFlowNeedsEveryInstanceFinal) {
    Automaton a;
    a.states = {"S0", "S1"};
    a.initial = "S0";
    a.finals = {"S0"};
    a.transitions.push_back({"S0", pattern("go", {Bound{var("x")}}), {}, {}, "S1"});
    const auto interp = single(make_spec("Q", QFlow{"x", {"a", "b"}, make_spec("A", a)}));
    auto s = interp.init();
    EXPECT_TRUE(interp.is_final(s));
    ASSERT_TRUE(interp.execute(s, {"go", {"b"}}));
    const auto& body = *std::get<QFlow>(interp.root().body).body;
    EXPECT_TRUE(interp.is_final(body, *find_instance(s, Value("a"))));
    EXPECT_FALSE(interp.is_final(body, *find_instance(s, Value("b"))));
    EXPECT_FALSE(interp.is_final(s));
}

TEST(Final, InitFinalLawOnRandomTrees) {
    test::Gen gen(3);
    for (int trial = 0; trial < 300; ++trial) {
        TreeGen tg{gen};
        auto root = tg.make(gen.integer(0, 3));
        const auto interp = single(root);
        EXPECT_EQ(interp.is_final(interp.init()), tg.all_leaves_final);
    }
}

// --- automaton -----------------------------------------------------------

TEST(Automaton, LoopIncrementsCounter) {
    const auto interp = single(loop("A", pattern("e"), increment("c"), {}, {int_attr("c", 0)}));
    auto s = interp.init();
    ASSERT_TRUE(interp.execute(s, {"e", {}}));
    EXPECT_EQ(s.attrs.at("c"), Value(1));
}

TEST(Automaton, UnknownEventRefused) {
    const auto interp = single(loop("A", pattern("e"), increment("c"), {}, {int_attr("c", 0)}));
    auto s = interp.init();
    EXPECT_FALSE(interp.execute(s, {"f", {}}));
    EXPECT_EQ(s.attrs.at("c"), Value(0));
}

TEST(Automaton, FalseGuardRefused) {
    const auto interp =
        single(loop("A", pattern("e"), increment("c"), [](const Env&) { return false; }, {int_attr("c", 0)}));
    auto s = interp.init();
    EXPECT_FALSE(interp.execute(s, {"e", {}}));
}

TEST(Automaton, CapturesVisibleToActionAndScopedOut) {
    const auto p = pattern("e", {Bound{var("userId")}, Capture{"eventDate", ValueKind::Text},
                                 Capture{"eventId", ValueKind::Text}});
    const auto interp = single(loop("A", p, append_to("seen", var("eventId")), {}, {list_attr("seen")}));
    auto s = interp.init();
    Env global{{"userId", "u1"}};
    ASSERT_TRUE(interp.execute(s, {"e", {"u1", "2010-01-04 08:05:00", "id1"}}, global));
    EXPECT_EQ(s.attrs.at("seen"), Value(Value::List{"id1"}));
    EXPECT_FALSE(global.contains("eventId"));
    EXPECT_FALSE(global.contains("eventDate"));
    EXPECT_FALSE(interp.execute(s, {"e", {"u2", "2010-01-04 08:05:00", "id2"}}, global));
}

TEST(Automaton, FirstDeclaredTransitionFires) {
    Automaton a;
    a.states = {"S0", "First", "Second"};
    a.initial = "S0";
    a.finals = {"S0"};
    a.transitions.push_back({"S0", pattern("e"), {}, {}, "First"});
    a.transitions.push_back({"S0", pattern("e"), {}, {}, "Second"});
    const auto interp = single(make_spec("A", a));
    auto s = interp.init();
    ASSERT_TRUE(interp.execute(s, {"e", {}}));
    EXPECT_EQ(std::get<AutomatonState>(s.node).current, "First");
}

TEST(Automaton, UndeclaredStateRejected) {
    Automaton a;
    a.states = {"S0"};
    a.initial = "S0";
    a.transitions.push_back({"S0", pattern("e"), {}, {}, "Missing"});
    EXPECT_THROW(single(make_spec("A", a)), SpecError);
}

// --- atomicity -------------------------------------------------------------

TEST(Atomicity, ThrowingActionLeavesStateUntouched) {
    auto first = loop("L", pattern("e"), increment("c"));
    auto second = loop("R", pattern("e"), [](Env& env) {
        env.mutate<Box>("box").n = 99;
        throw std::runtime_error("boom");
    });
    const auto interp = single(make_spec(
        "F", Flow{first, second}, {int_attr("c", 0), {"box", [] { return Value(Handle::make<Box>()); }}}));
    auto s = interp.init();
    const std::string before = interp.dump(s);
    EXPECT_THROW(interp.execute(s, {"e", {}}), std::runtime_error);
    EXPECT_EQ(interp.dump(s), before);
    EXPECT_EQ(s.attrs.object<Box>("box").n, 0);
    EXPECT_EQ(s.attrs.at("c"), Value(0));
}

TEST(Atomicity, RefusalNeverMutates) {
    test::Gen gen(5);
    for (int trial = 0; trial < 200; ++trial) {
        TreeGen tg{gen};
        const auto interp = single(tg.make(gen.integer(0, 3)));
        auto s = interp.init();
        for (int i = 0; i < 4; ++i) {
            const std::string before = interp.dump(s);
            const Event ev{gen.chance(0.7) ? "e" : "f", {gen.integer(1, 4)}};
            if (!interp.execute(s, ev)) {
                EXPECT_EQ(interp.dump(s), before);
            }
        }
    }
}

// --- flow ------------------------------------------------------------------

TEST(Flow, BothFireLeftThenRight) {
    auto left = loop("L", pattern("e"), append_to("log", constant("left")));
    auto right = loop("R", pattern("e"), append_to("log", constant("right")));
    const auto interp = single(make_spec("F", Flow{left, right}, {list_attr("log")}));
    auto s = interp.init();
    ASSERT_TRUE(interp.execute(s, {"e", {}}));
    EXPECT_EQ(s.attrs.at("log"), Value(Value::List{"left", "right"}));
}

TEST(Flow, RightSeesLeftUpdates) {
    auto left = loop("L", pattern("e"), increment("c"));
    auto right = loop("R", pattern("e"), append_to("log", var("c")));
    const auto interp = single(make_spec("F", Flow{left, right}, {int_attr("c", 0), list_attr("log")}));
    auto s = interp.init();
    ASSERT_TRUE(interp.execute(s, {"e", {}}));
    ASSERT_TRUE(interp.execute(s, {"e", {}}));
    EXPECT_EQ(s.attrs.at("log"), Value(Value::List{1, 2}));
}

TEST(Flow, OnlyRightAccepts) {
    Automaton a;
    a.states = {"S0", "S1"};
    a.initial = "S0";
    a.finals = {"S0"};
    a.transitions.push_back({"S0", pattern("other"), {}, {}, "S1"});
    auto left = make_spec("L", a);
    auto right = loop("R", pattern("e"), increment("c"));
    const auto interp = single(make_spec("F", Flow{left, right}, {int_attr("c", 0)}));
    auto s = interp.init();
    const auto left_before = std::get<FlowState>(s.node).left;
    ASSERT_TRUE(interp.execute(s, {"e", {}}));
    EXPECT_EQ(std::get<FlowState>(s.node).left, left_before);
    EXPECT_EQ(std::get<AutomatonState>(child(s, true).node).current, "S0");
    EXPECT_EQ(s.attrs.at("c"), Value(1));
}

TEST(Flow, NeitherAcceptsRefused) {
    auto left = loop("L", pattern("x"));
    auto right = loop("R", pattern("y"));
    const auto interp = single(make_spec("F", Flow{left, right}));
    auto s = interp.init();
    EXPECT_FALSE(interp.execute(s, {"e", {}}));
}

// --- qflow -----------------------------------------------------------------

TEST(QFlow, AllInstancesFireInCanonicalOrder) {
    const auto interp = single(qflow_logger({"d3", "d1", "d2"}));
    auto s = interp.init();
    ASSERT_TRUE(interp.execute(s, {"e", {}}));
    EXPECT_EQ(s.attrs.at("log"), Value(Value::List{"d1", "d2", "d3"}));
}

TEST(QFlow, OnlyGuardedInstanceFires) {
    auto body = loop("B", pattern("e"), increment("hits"),
                     [](const Env& env) { return env.at("d") == Value("d2"); }, {int_attr("hits", 0)});
    const auto interp = single(make_spec("Q", QFlow{"d", {"d1", "d2", "d3"}, body}));
    auto s = interp.init();
    const auto before = std::get<QFlowState>(s.node).instances;
    ASSERT_TRUE(interp.execute(s, {"e", {}}));
    const auto& after = std::get<QFlowState>(s.node).instances;
    EXPECT_EQ(after.at(Value("d1")), before.at(Value("d1")));
    EXPECT_EQ(after.at(Value("d3")), before.at(Value("d3")));
    EXPECT_EQ(after.at(Value("d2"))->attrs.at("hits"), Value(1));
}

TEST(QFlow, NoInstanceFiresRefused) {
    const auto interp = single(qflow_logger({"d1", "d2"}, [](const Env&) { return false; }));
    auto s = interp.init();
    EXPECT_FALSE(interp.execute(s, {"e", {}}));
}

TEST(QFlow, QuantifiedVariableDoesNotLeak) {
    const auto interp = single(qflow_logger({"d1"}));
    auto s = interp.init();
    Env global;
    ASSERT_TRUE(interp.execute(s, {"e", {}}, global));
    EXPECT_FALSE(global.contains("d"));
}

TEST(QFlow, CommutativeActionsInvariantUnderAllPermutations) {
    // Each instance adds its own weight to a shared total and bumps its own counter.
    const std::vector<Value> domain{1, 10, 100};
    SpecLibrary lib;
    lib.add(test::commutative_qflow());
    Interpreter interp(lib, "Q");

    auto reference = interp.init();
    for (int i = 0; i < 3; ++i) {
        ASSERT_TRUE(interp.execute(reference, {"e", {}}));
    }
    std::vector<Value> perm = domain;
    int orders = 0;
    do {
        interp.set_order_hook([perm](const AstdSpec&, const std::vector<Value>&) { return perm; });
        auto s = interp.init();
        for (int i = 0; i < 3; ++i) {
            ASSERT_TRUE(interp.execute(s, {"e", {}}));
        }
        EXPECT_EQ(interp.dump(s), interp.dump(reference));
        EXPECT_EQ(s.attrs.at("total"), Value(333));
        ++orders;
    } while (std::next_permutation(perm.begin(), perm.end()));
    EXPECT_EQ(orders, 6);
}

TEST(QFlow, HookMustReturnPermutation) {
    SpecLibrary lib;
    lib.add(qflow_logger({"a", "b"}));
    Interpreter interp(lib, "Q");
    interp.set_order_hook([](const AstdSpec&, const std::vector<Value>&) { return std::vector<Value>{"a", "a"}; });
    auto s = interp.init();
    EXPECT_THROW(interp.execute(s, {"e", {}}), Error);
}

TEST(QFlow, ShadowingAttributeRejected) {
    auto body = loop("B", pattern("e"));
    EXPECT_THROW(single(make_spec("Q", QFlow{"d", {1}, body}, {int_attr("d", 0)})), SpecError);
}

TEST(Spec, DuplicateAttributeRejected) {
    EXPECT_THROW(single(loop("A", pattern("e"), {}, {}, {int_attr("c", 0), int_attr("c", 1)})), SpecError);
}

// --- qinterleave -------------------------------------------------------------

TEST(QInterleave, FirstEventCreatesInstance) {
    const auto interp = single(per_user_counter());
    auto s = interp.init();
    ASSERT_TRUE(interp.execute(s, {"e", {"u7", "a"}}));
    ASSERT_NE(find_instance(s, Value("u7")), nullptr);
    EXPECT_EQ(find_instance(s, Value("u7"))->attrs.at("ids"), Value(Value::List{"a"}));
    ASSERT_TRUE(interp.execute(s, {"e", {"u7", "b"}}));
    EXPECT_EQ(std::get<QInterleaveState>(s.node).instances.size(), 1u);
    EXPECT_EQ(find_instance(s, Value("u7"))->attrs.at("ids"), Value(Value::List{"a", "b"}));
}

TEST(QInterleave, InterleavingMatchesIsolatedRuns) {
    const auto interp = single(per_user_counter());
    const std::vector<Event> u7{{"e", {"u7", "1"}}, {"e", {"u7", "2"}}, {"e", {"u7", "3"}}};
    const std::vector<Event> u9{{"e", {"u9", "x"}}, {"e", {"u9", "y"}}};
    auto alone7 = interp.init();
    for (const auto& e : u7) {
        ASSERT_TRUE(interp.execute(alone7, e));
    }
    auto alone9 = interp.init();
    for (const auto& e : u9) {
        ASSERT_TRUE(interp.execute(alone9, e));
    }
    test::Gen gen(17);
    for (int trial = 0; trial < 50; ++trial) {
        auto mixed = interp.init();
        std::size_t i = 0;
        std::size_t j = 0;
        while (i < u7.size() || j < u9.size()) {
            const bool take7 = j == u9.size() || (i < u7.size() && gen.chance(0.5));
            ASSERT_TRUE(interp.execute(mixed, take7 ? u7[i++] : u9[j++]));
        }
        EXPECT_EQ(find_instance(mixed, Value("u7"))->attrs, find_instance(alone7, Value("u7"))->attrs);
        EXPECT_EQ(find_instance(mixed, Value("u9"))->attrs, find_instance(alone9, Value("u9"))->attrs);
    }
}

TEST(QInterleave, MissingRoutingValueIsInputError) {
    const auto interp = single(per_user_counter());
    auto s = interp.init();
    EXPECT_THROW(interp.execute(s, {"e", {}}), InputError);
    EXPECT_THROW(interp.execute(s, {"e", {1.5, "a"}}), InputError);
}

TEST(QInterleave, BoundedDomainRefusesUnknownValue) {
    auto body = loop("U", pattern("e", {Bound{var("u")}}));
    const auto interp = single(make_spec("I", QInterleave{"u", std::vector<Value>{1, 2}, body}));
    auto s = interp.init();
    EXPECT_TRUE(interp.execute(s, {"e", {1}}));
    EXPECT_FALSE(interp.execute(s, {"e", {3}}));
}

// --- call --------------------------------------------------------------------

TEST(Call, BindsArgumentsAndDelegates) {
    SpecLibrary lib;
    lib.add(make_spec("Inner", std::get<Automaton>(loop("x", pattern("e"), append_to("log", var("p")))->body), {}, {},
                      {"p"}));
    lib.add(make_spec("Root", Call{"Inner", {constant("hello")}}, {list_attr("log")}));
    Interpreter interp(lib, "Root");
    auto s = interp.init();
    Env global;
    ASSERT_TRUE(interp.execute(s, {"e", {}}, global));
    EXPECT_EQ(s.attrs.at("log"), Value(Value::List{"hello"}));
    EXPECT_FALSE(global.contains("p"));
}

TEST(Call, CalleeRefusalPropagates) {
    SpecLibrary lib;
    lib.add(make_spec("Inner", std::get<Automaton>(loop("x", pattern("only"))->body)));
    lib.add(make_spec("Root", Call{"Inner", {}}));
    Interpreter interp(lib, "Root");
    auto s = interp.init();
    EXPECT_FALSE(interp.execute(s, {"e", {}}));
}

TEST(Call, NestedCallsLayerEnvironments) {
    SpecLibrary lib;
    auto leaf = std::get<Automaton>(loop("x", pattern("e"), [](Env& env) {
                                        auto log = env.at("log").as_list();
                                        log.push_back(Value(Value::List{env.at("outer"), env.at("inner")}));
                                        env.assign("log", Value(log));
                                    })->body);
    lib.add(make_spec("Leaf", leaf, {}, {}, {"inner"}));
    lib.add(make_spec("Middle", Call{"Leaf", {[](const Env& env) {
                                         return Value(env.at("outer").as_text() + "+");
                                     }}},
                      {}, {}, {"outer"}));
    lib.add(make_spec("Root", Call{"Middle", {constant("o")}}, {list_attr("log")}));
    Interpreter interp(lib, "Root");
    auto s = interp.init();
    ASSERT_TRUE(interp.execute(s, {"e", {}}));
    EXPECT_EQ(s.attrs.at("log"), Value(Value::List{Value(Value::List{"o", "o+"})}));
}

TEST(Call, ArityMismatchRejected) {
    SpecLibrary lib;
    lib.add(make_spec("Inner", std::get<Automaton>(loop("x", pattern("e"))->body), {}, {}, {"p"}));
    lib.add(make_spec("Root", Call{"Inner", {}}));
    EXPECT_THROW(Interpreter(lib, "Root"), SpecError);
}

TEST(Call, RecursionRejected) {
    SpecLibrary lib;
    lib.add(make_spec("Root", Call{"Root", {}}));
    EXPECT_THROW(Interpreter(lib, "Root"), SpecError);
}

// --- Θ and determinism ---------------------------------------------------------

TEST(Theta, LocalAttributesAndEnclosingSplit) {
    // A node with attribute a writes both its own attribute and the
    // enclosing variable g; the node action runs after the body.
    auto body = loop("B", pattern("e"), [](Env& env) {
        env.assign("a", env.at("a").as_int() + 1);
        env.assign("g", env.at("g").as_int() + 10);
    });
    SpecLibrary lib;
    lib.add(make_spec("N", Flow{body, loop("C", pattern("never"))}, {int_attr("a", 0)},
                      [](Env& env) { env.assign("a", env.at("a").as_int() * 100); }));
    Interpreter interp(lib, "N");
    const auto s = interp.init();
    const Env enclosing{{"g", 1}, {"other", "x"}};
    const auto r = interp.step(interp.root(), s, {"e", {}}, enclosing);
    ASSERT_TRUE(r);
    EXPECT_EQ(r->state.attrs, (Env{{"a", 100}}));
    EXPECT_EQ(r->enclosing, (Env{{"g", 11}, {"other", "x"}}));
    EXPECT_EQ(r->state.attrs.domain(), interp.root().attribute_names());
}

TEST(Determinism, SameEventsSameState) {
    const auto interp = single(per_user_counter());
    auto a = interp.init();
    auto b = interp.init();
    for (int i = 0; i < 20; ++i) {
        const Event e{"e", {"u" + std::to_string(i % 3), std::to_string(i)}};
        ASSERT_TRUE(interp.execute(a, e));
        ASSERT_TRUE(interp.execute(b, e));
    }
    EXPECT_EQ(interp.dump(a), interp.dump(b));
}

TEST(Dump, StableNestedText) {
    const auto interp = single(qflow_logger({"b", "a"}));
    auto s = interp.init();
    ASSERT_TRUE(interp.execute(s, {"e", {}}));
    const std::string text = interp.dump(s);
    EXPECT_LT(text.find("d=\"a\""), text.find("d=\"b\"")) << text;
    EXPECT_EQ(text.rfind("Q : qflow", 0), 0u) << text;
}

} // namespace
} // namespace astd::engine
