#include "repfact/dfao.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace repfact {

std::size_t Dfao::alphabet_size() const {
    std::size_t size = 1;
    for (std::size_t t = 0; t < arity; ++t) size *= numeration.digit_bound();
    return size;
}

std::size_t Dfao::symbol_index(std::span<const unsigned> tuple) const {
    if (tuple.size() != arity) throw std::invalid_argument("symbol arity mismatch");
    const unsigned bound = numeration.digit_bound();
    std::size_t index = 0;
    for (unsigned d : tuple) {
        if (d >= bound) {
            throw std::invalid_argument("digit " + std::to_string(d) +
                                        " outside alphabet bound " +
                                        std::to_string(bound));
        }
        index = index * bound + d;
    }
    return index;
}

std::vector<unsigned> Dfao::symbol_tuple(std::size_t index) const {
    const unsigned bound = numeration.digit_bound();
    std::vector<unsigned> tuple(arity, 0);
    for (std::size_t t = arity; t-- > 0;) {
        tuple[t] = static_cast<unsigned>(index % bound);
        index /= bound;
    }
    return tuple;
}

bool Dfao::is_acceptor() const {
    return std::all_of(outputs.begin(), outputs.end(),
                       [](int v) { return v == 0 || v == 1; });
}

void Dfao::validate() const {
    const std::size_t n = state_count();
    if (n == 0) throw std::invalid_argument("DFAO has no states");
    if (start < 0 || static_cast<std::size_t>(start) >= n) {
        throw std::invalid_argument("DFAO start state out of range");
    }
    if (transitions.size() != n * alphabet_size()) {
        throw std::invalid_argument("DFAO transition table is not total");
    }
    for (int t : transitions) {
        if (t < 0 || static_cast<std::size_t>(t) >= n) {
            throw std::invalid_argument("DFAO transition target out of range");
        }
    }
    if (dead) {
        const int d = *dead;
        if (d < 0 || static_cast<std::size_t>(d) >= n) {
            throw std::invalid_argument("DFAO dead state out of range");
        }
        if (outputs[d] != 0) {
            throw std::invalid_argument("DFAO dead state must output 0");
        }
        for (std::size_t a = 0; a < alphabet_size(); ++a) {
            if (next(d, a) != d) {
                throw std::invalid_argument("DFAO dead state must be absorbing");
            }
        }
    }
}

int evaluate(const Dfao& m, const DigitString& input) {
    if (input.arity != m.arity) {
        throw std::invalid_argument("input arity does not match machine arity");
    }
    int state = m.start;
    const unsigned bound = m.numeration.digit_bound();
    for (std::size_t p = 0; p < input.length(); ++p) {
        std::size_t index = 0;
        for (std::size_t t = 0; t < m.arity; ++t) {
            unsigned d = input.at(p, t);
            if (d >= bound) {
                throw std::invalid_argument("input digit outside machine alphabet");
            }
            index = index * bound + d;
        }
        state = m.next(state, index);
    }
    return m.outputs[state];
}

int evaluate_nat(const Dfao& m, std::span<const std::uint64_t> args) {
    if (args.size() != m.arity) {
        throw std::invalid_argument("argument count does not match machine arity");
    }
    return evaluate(m, encode_tuple(args, m.numeration));
}

int evaluate_nat(const Dfao& m, std::uint64_t a) {
    const std::uint64_t args[1] = {a};
    return evaluate_nat(m, args);
}

int evaluate_nat(const Dfao& m, std::uint64_t a, std::uint64_t b) {
    const std::uint64_t args[2] = {a, b};
    return evaluate_nat(m, args);
}

Dfao combine(const std::vector<std::pair<const Dfao*, int>>& acceptors) {
    if (acceptors.empty()) throw std::invalid_argument("combine of no acceptors");
    const Dfao& first = *acceptors.front().first;
    for (const auto& [m, value] : acceptors) {
        m->validate();
        if (!m->is_acceptor()) {
            throw std::invalid_argument("combine requires boolean acceptors");
        }
        if (!(m->numeration == first.numeration) || m->arity != first.arity) {
            throw std::invalid_argument("combine requires matching numeration and arity");
        }
        (void)value;
    }

    const std::size_t alpha = first.alphabet_size();
    Dfao out;
    out.numeration = first.numeration;
    out.arity = first.arity;
    out.start = 0;

    std::map<std::vector<int>, int> ids;
    std::deque<std::vector<int>> queue;
    std::vector<int> start_tuple;
    start_tuple.reserve(acceptors.size());
    for (const auto& [m, value] : acceptors) start_tuple.push_back(m->start);
    ids.emplace(start_tuple, 0);
    queue.push_back(start_tuple);

    auto output_of = [&](const std::vector<int>& tuple) {
        int value = 0;
        for (std::size_t k = 0; k < acceptors.size(); ++k) {
            // last listed acceptor that accepts wins
            if (acceptors[k].first->outputs[tuple[k]] == 1) value = acceptors[k].second;
        }
        return value;
    };

    while (!queue.empty()) {
        std::vector<int> tuple = std::move(queue.front());
        queue.pop_front();
        const int id = ids.at(tuple);
        if (static_cast<std::size_t>(id) >= out.outputs.size()) {
            out.outputs.resize(id + 1);
            out.transitions.resize((id + 1) * alpha);
        }
        out.outputs[id] = output_of(tuple);
        for (std::size_t a = 0; a < alpha; ++a) {
            std::vector<int> next_tuple(tuple.size());
            for (std::size_t k = 0; k < acceptors.size(); ++k) {
                next_tuple[k] = acceptors[k].first->next(tuple[k], a);
            }
            auto [it, inserted] = ids.emplace(next_tuple, static_cast<int>(ids.size()));
            if (inserted) queue.push_back(next_tuple);
            out.transitions[id * alpha + a] = it->second;
        }
    }
    out.transitions.resize(out.outputs.size() * alpha);
    out.validate();
    return out;
}

namespace {

// absorbing zero-output state, if any (unique after minimization)
std::optional<int> find_dead(const Dfao& m) {
    const std::size_t alpha = m.alphabet_size();
    for (std::size_t s = 0; s < m.state_count(); ++s) {
        if (m.outputs[s] != 0) continue;
        bool absorbing = true;
        for (std::size_t a = 0; a < alpha; ++a) {
            if (m.next(static_cast<int>(s), a) != static_cast<int>(s)) {
                absorbing = false;
                break;
            }
        }
        if (absorbing) return static_cast<int>(s);
    }
    return std::nullopt;
}

} // namespace

Dfao minimize(const Dfao& m) {
    m.validate();
    const std::size_t alpha = m.alphabet_size();

    // trim to reachable states
    std::vector<int> reach_id(m.state_count(), -1);
    std::vector<int> reachable;
    reach_id[m.start] = 0;
    reachable.push_back(m.start);
    for (std::size_t q = 0; q < reachable.size(); ++q) {
        for (std::size_t a = 0; a < alpha; ++a) {
            int to = m.next(reachable[q], a);
            if (reach_id[to] < 0) {
                reach_id[to] = static_cast<int>(reachable.size());
                reachable.push_back(to);
            }
        }
    }
    const std::size_t n = reachable.size();

    // Moore refinement: split classes by (output, successor classes)
    std::vector<int> cls(n);
    {
        std::map<int, int> by_output;
        for (std::size_t q = 0; q < n; ++q) {
            auto [it, _] = by_output.emplace(m.outputs[reachable[q]],
                                             static_cast<int>(by_output.size()));
            cls[q] = it->second;
        }
    }
    for (;;) {
        const std::size_t old_count =
            static_cast<std::size_t>(*std::max_element(cls.begin(), cls.end())) + 1;
        std::map<std::vector<int>, int> signature_ids;
        std::vector<int> next_cls(n);
        for (std::size_t q = 0; q < n; ++q) {
            std::vector<int> sig;
            sig.reserve(alpha + 1);
            sig.push_back(cls[q]);
            for (std::size_t a = 0; a < alpha; ++a) {
                sig.push_back(cls[reach_id[m.next(reachable[q], a)]]);
            }
            auto [it, _] = signature_ids.emplace(std::move(sig),
                                                 static_cast<int>(signature_ids.size()));
            next_cls[q] = it->second;
        }
        const std::size_t new_count = signature_ids.size();
        cls = std::move(next_cls);
        if (new_count == old_count) break;
    }

    const std::size_t classes =
        static_cast<std::size_t>(*std::max_element(cls.begin(), cls.end())) + 1;

    // canonical numbering: BFS over classes from the start class
    std::vector<int> order(classes, -1);
    std::vector<int> class_rep(classes, -1);
    for (std::size_t q = n; q-- > 0;) class_rep[cls[q]] = static_cast<int>(q);
    std::vector<int> bfs;
    order[cls[reach_id[m.start]]] = 0;
    bfs.push_back(cls[reach_id[m.start]]);
    for (std::size_t h = 0; h < bfs.size(); ++h) {
        int rep = class_rep[bfs[h]];
        for (std::size_t a = 0; a < alpha; ++a) {
            int target = cls[reach_id[m.next(reachable[rep], a)]];
            if (order[target] < 0) {
                order[target] = static_cast<int>(bfs.size());
                bfs.push_back(target);
            }
        }
    }

    Dfao out;
    out.numeration = m.numeration;
    out.arity = m.arity;
    out.start = 0;
    out.outputs.assign(classes, 0);
    out.transitions.assign(classes * alpha, 0);
    for (std::size_t c = 0; c < classes; ++c) {
        int rep = class_rep[c];
        int id = order[c];
        out.outputs[id] = m.outputs[reachable[rep]];
        for (std::size_t a = 0; a < alpha; ++a) {
            out.transitions[id * alpha + a] =
                order[cls[reach_id[m.next(reachable[rep], a)]]];
        }
    }
    out.dead = find_dead(out);
    out.validate();
    return out;
}

EquivalenceResult equivalent(const Dfao& a, const Dfao& b) {
    a.validate();
    b.validate();
    if (!(a.numeration == b.numeration) || a.arity != b.arity) {
        throw std::invalid_argument("equivalent requires matching numeration and arity");
    }
    const std::size_t alpha = a.alphabet_size();

    struct Node {
        int parent;       // index into visited list, -1 for the root
        std::size_t via;  // symbol taken from the parent
    };
    std::map<std::pair<int, int>, int> seen;
    std::vector<std::pair<int, int>> pairs;
    std::vector<Node> nodes;

    auto make_counterexample = [&](int node_index) {
        std::vector<std::size_t> symbols;
        for (int at = node_index; nodes[at].parent >= 0; at = nodes[at].parent) {
            symbols.push_back(nodes[at].via);
        }
        std::reverse(symbols.begin(), symbols.end());
        DigitString d;
        d.arity = a.arity;
        for (std::size_t sym : symbols) {
            auto tuple = a.symbol_tuple(sym);
            d.digits.insert(d.digits.end(), tuple.begin(), tuple.end());
        }
        return d;
    };

    seen.emplace(std::make_pair(a.start, b.start), 0);
    pairs.emplace_back(a.start, b.start);
    nodes.push_back({-1, 0});
    for (std::size_t h = 0; h < pairs.size(); ++h) {
        auto [sa, sb] = pairs[h];
        if (a.outputs[sa] != b.outputs[sb]) {
            return {false, make_counterexample(static_cast<int>(h))};
        }
        for (std::size_t sym = 0; sym < alpha; ++sym) {
            std::pair<int, int> to{a.next(sa, sym), b.next(sb, sym)};
            if (seen.emplace(to, static_cast<int>(pairs.size())).second) {
                pairs.push_back(to);
                nodes.push_back({static_cast<int>(h), sym});
            }
        }
    }
    return {true, std::nullopt};
}

std::string serialize(const Dfao& m, bool omit_dead,
                      const std::vector<std::string>& header_comments) {
    m.validate();
    std::ostringstream out;
    for (const auto& line : header_comments) out << "# " << line << "\n";
    std::string kind = m.numeration.kind == NumerationSystem::Kind::zeckendorf
                           ? "zeckendorf"
                           : "base_" + std::to_string(m.numeration.base);
    out << "numeration " << kind << ' '
        << (m.numeration.order == DigitOrder::msd ? "msd" : "lsd") << " arity "
        << m.arity << "\n";
    out << "start " << m.start << "\n";
    if (m.dead) out << "dead " << *m.dead << "\n";

    const bool skip_dead = omit_dead && m.dead.has_value();
    const int dead = m.dead.value_or(-1);
    if (skip_dead && m.start == dead) {
        throw std::invalid_argument("cannot omit a dead start state");
    }
    for (std::size_t s = 0; s < m.state_count(); ++s) {
        if (skip_dead && static_cast<int>(s) == dead) continue;
        out << "state " << s << " output " << m.outputs[s] << "\n";
    }
    const std::size_t alpha = m.alphabet_size();
    for (std::size_t s = 0; s < m.state_count(); ++s) {
        if (skip_dead && static_cast<int>(s) == dead) continue;
        for (std::size_t a = 0; a < alpha; ++a) {
            int to = m.next(static_cast<int>(s), a);
            if (skip_dead && to == dead) continue;
            auto tuple = m.symbol_tuple(a);
            out << "trans " << s << " [";
            for (std::size_t t = 0; t < tuple.size(); ++t) {
                if (t) out << ',';
                out << tuple[t];
            }
            out << "] " << to << "\n";
        }
    }
    return out.str();
}

namespace {

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& message) {
    throw std::invalid_argument("DFAO parse error at line " +
                                std::to_string(line_no) + ": " + message);
}

} // namespace

Dfao parse_dfao(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;

    bool have_numeration = false;
    bool have_start = false;
    Dfao m;
    std::optional<int> declared_dead;
    std::map<int, int> outputs;
    // (from, symbol) -> to
    std::map<std::pair<int, std::size_t>, int> trans;
    int max_state = -1;

    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;

        if (head == "numeration") {
            std::string kind, order, arity_kw;
            std::size_t arity = 0;
            if (!(ls >> kind >> order >> arity_kw >> arity) || arity_kw != "arity") {
                parse_fail(line_no, "expected 'numeration <kind> <msd|lsd> arity <k>'");
            }
            if (arity == 0) parse_fail(line_no, "arity must be positive");
            try {
                m.numeration = NumerationSystem::parse(kind, order);
            } catch (const std::exception& e) {
                parse_fail(line_no, e.what());
            }
            m.arity = arity;
            have_numeration = true;
        } else if (head == "state") {
            int id = 0, output = 0;
            std::string output_kw;
            if (!(ls >> id >> output_kw >> output) || output_kw != "output" || id < 0) {
                parse_fail(line_no, "expected 'state <id> output <v>'");
            }
            if (!outputs.emplace(id, output).second) {
                parse_fail(line_no, "duplicate state " + std::to_string(id));
            }
            max_state = std::max(max_state, id);
        } else if (head == "trans") {
            if (!have_numeration) parse_fail(line_no, "trans before numeration header");
            int from = 0, to = 0;
            std::string tuple_text;
            if (!(ls >> from >> tuple_text >> to) || from < 0 || to < 0) {
                parse_fail(line_no, "expected 'trans <from> [d1,...,dk] <to>'");
            }
            if (tuple_text.size() < 2 || tuple_text.front() != '[' ||
                tuple_text.back() != ']') {
                parse_fail(line_no, "digit tuple must be bracketed, e.g. [1,0]");
            }
            std::vector<unsigned> tuple;
            std::string body = tuple_text.substr(1, tuple_text.size() - 2);
            std::istringstream ts(body);
            std::string item;
            while (std::getline(ts, item, ',')) {
                try {
                    tuple.push_back(static_cast<unsigned>(std::stoul(item)));
                } catch (const std::exception&) {
                    parse_fail(line_no, "bad digit '" + item + "'");
                }
            }
            if (tuple.size() != m.arity) {
                parse_fail(line_no, "tuple arity does not match header");
            }
            std::size_t symbol = 0;
            try {
                symbol = m.symbol_index(tuple);
            } catch (const std::exception& e) {
                parse_fail(line_no, e.what());
            }
            if (!trans.emplace(std::make_pair(from, symbol), to).second) {
                parse_fail(line_no, "duplicate transition");
            }
            max_state = std::max({max_state, from, to});
        } else if (head == "start") {
            int id = 0;
            if (!(ls >> id) || id < 0) parse_fail(line_no, "expected 'start <id>'");
            m.start = id;
            have_start = true;
            max_state = std::max(max_state, id);
        } else if (head == "dead") {
            int id = 0;
            if (!(ls >> id) || id < 0) parse_fail(line_no, "expected 'dead <id>'");
            declared_dead = id;
            max_state = std::max(max_state, id);
        } else {
            parse_fail(line_no, "unknown directive '" + head + "'");
        }
    }

    if (!have_numeration) parse_fail(line_no, "missing numeration header");
    if (!have_start) parse_fail(line_no, "missing start line");
    if (max_state < 0) parse_fail(line_no, "no states");

    const std::size_t n = static_cast<std::size_t>(max_state) + 1;
    const std::size_t alpha = m.alphabet_size();
    m.outputs.assign(n, 0);
    for (auto [id, v] : outputs) m.outputs[id] = v;
    if (declared_dead) {
        if (outputs.count(*declared_dead) && m.outputs[*declared_dead] != 0) {
            parse_fail(line_no, "dead state must output 0");
        }
        m.outputs[*declared_dead] = 0;
    }
    m.dead = declared_dead;

    // re-complete: missing transitions go to the declared dead state
    m.transitions.assign(n * alpha, -1);
    for (auto [key, to] : trans) {
        m.transitions[static_cast<std::size_t>(key.first) * alpha + key.second] = to;
    }
    for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t a = 0; a < alpha; ++a) {
            int& slot = m.transitions[s * alpha + a];
            if (slot < 0) {
                if (!declared_dead) {
                    parse_fail(line_no, "machine incomplete at state " +
                                            std::to_string(s) +
                                            " and no dead state declared");
                }
                slot = *declared_dead;
            }
        }
    }
    for (auto [id, v] : outputs) {
        if (static_cast<std::size_t>(id) >= n) {
            parse_fail(line_no, "state id out of range");
        }
        (void)v;
    }
    m.validate();
    return m;
}

} // namespace repfact
