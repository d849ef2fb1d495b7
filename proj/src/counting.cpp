#include "dwork/counting.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

namespace dwork {

namespace {

int g_jobs = 0;

struct CacheKey {
    int n;
    std::uint32_t q, psi;
    int r;
    std::vector<int> t;
    Perm sigma;
    bool operator<(const CacheKey& o) const {
        return std::tie(n, q, psi, r, t, sigma) < std::tie(o.n, o.q, o.psi, o.r, o.t, o.sigma);
    }
};
std::mutex g_cache_mu;
std::map<CacheKey, BigInt> g_cache;

// F_Q inside a bigger table, indexed by dlog relative to h; index Q-1 is zero.
struct SubfieldArith {
    std::uint64_t Q;
    std::uint32_t Z;  // zero sentinel
    std::vector<std::uint32_t> zech;
    std::uint32_t neg_one;

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        if (a == Z) return b;
        if (b == Z) return a;
        std::uint32_t k = b >= a ? b - a : static_cast<std::uint32_t>(b + (Q - 1) - a);
        std::uint32_t z = zech[k];
        if (z == Z) return Z;
        return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) + z) % (Q - 1));
    }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (a == Z || b == Z) return Z;
        return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) + b) % (Q - 1));
    }
    std::uint32_t neg(std::uint32_t a) const { return mul(a, neg_one); }
};

std::uint64_t powu(std::uint64_t b, unsigned e) { return checked_pow(b, e); }

}  // namespace

void set_jobs(int j) { g_jobs = j; }

int jobs() {
    if (g_jobs > 0) return g_jobs;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

void clear_count_cache() {
    std::lock_guard<std::mutex> lock(g_cache_mu);
    g_cache.clear();
}

DworkInstance make_instance(int n, std::int64_t q, std::int64_t psi) {
    if (n < 3 || n > 9) invalid_input("n", "must lie in 3..9");
    if (q < 3 || !is_prime(static_cast<std::uint64_t>(q))) invalid_input("q", std::to_string(q) + " is not an odd prime");
    if (q % n == 0) invalid_input("q", "must not divide n");
    if (q % n != 1) invalid_input("q", "must be 1 mod n");
    std::int64_t ps = mod(psi, q);
    if (ps == 0) invalid_input("psi", "must be nonzero mod q");
    if (powmod(static_cast<std::uint64_t>(ps), n, q) == 1) invalid_input("psi", "psi^n = 1, the hypersurface is singular");
    return DworkInstance{n, static_cast<std::uint32_t>(q), static_cast<std::uint32_t>(ps)};
}

std::uint64_t field_size(const DworkInstance& inst, int r) {
    if (r < 1) invalid_input("r", "must be at least 1");
    double est = std::pow(static_cast<double>(inst.q), r);
    if (est > static_cast<double>(kFieldCap)) cost_cap_exceeded("q^r", est);
    return powu(inst.q, static_cast<unsigned>(r));
}

RootCountTable build_root_count_table(const FieldTable& F, int n) {
    const std::uint32_t Q = F.size();
    require_cost("root_count_table", static_cast<double>(Q) * Q);
    RootCountTable T;
    T.Q = Q;
    T.n = n;
    T.R.assign(static_cast<std::size_t>(Q) * Q, 0);
    for (std::uint32_t xe = 0; xe < Q; ++xe) {
        FqElem x = F.from_enc(xe);
        FqElem xn = F.pow(x, n);
        for (std::uint32_t be = 0; be < Q; ++be) {
            FqElem s = F.sub(F.mul(F.from_enc(be), x), xn);
            ++T.R[static_cast<std::size_t>(be) * Q + F.to_enc(s)];
        }
    }
    return T;
}

BigInt count_points(const DworkInstance& inst, int r) {
    const int n = inst.n;
    const std::uint64_t Q = field_size(inst, r);
    require_cost("count_points", static_cast<double>(Q) * Q * Q * (n - 1) + static_cast<double>(Q) * Q);
    auto F = field(inst.q, r);
    auto R = build_root_count_table(*F, n);
    // state over (S, P) = (sum x_i^n, prod x_i) of the first n-1 coordinates, by encoding
    std::vector<std::uint64_t> st(Q * Q, 0), nx(Q * Q, 0);
    st[0 * Q + 1] = 1;
    std::vector<std::uint32_t> xn_enc(Q);
    for (std::uint32_t xe = 0; xe < Q; ++xe) xn_enc[xe] = F->to_enc(F->pow(F->from_enc(xe), n));
    for (int step = 0; step < n - 1; ++step) {
        std::fill(nx.begin(), nx.end(), 0);
        for (std::uint32_t S = 0; S < Q; ++S)
            for (std::uint32_t P = 0; P < Q; ++P) {
                std::uint64_t c = st[S * Q + P];
                if (!c) continue;
                FqElem Pl = F->from_enc(P);
                for (std::uint32_t xe = 0; xe < Q; ++xe) {
                    std::uint32_t S2 = F->add_enc(S, xn_enc[xe]);
                    std::uint32_t P2 = F->to_enc(F->mul(Pl, F->from_enc(xe)));
                    nx[S2 * Q + P2] += c;
                }
            }
        std::swap(st, nx);
    }
    FqElem npsi = F->from_int(static_cast<std::int64_t>(n) * inst.psi);
    BigInt affine = 0;
    for (std::uint32_t S = 0; S < Q; ++S)
        for (std::uint32_t P = 0; P < Q; ++P) {
            std::uint64_t c = st[S * Q + P];
            if (!c) continue;
            std::uint32_t b = F->to_enc(F->mul(npsi, F->from_enc(P)));
            affine += BigInt(c) * R.at(b, S);
        }
    affine -= 1;
    if (affine % (Q - 1) != 0) check_failed("count_points", "affine count not divisible by Q-1");
    return affine / (Q - 1);
}

BigInt fixed_count_general(const DworkInstance& inst, const GroupElement& g, int r, std::uint64_t theta_exp) {
    const int n = inst.n;
    if (static_cast<int>(g.t.size()) != n || static_cast<int>(g.sigma.size()) != n) invalid_input("g", "size mismatch");
    const std::uint64_t Q = field_size(inst, r);
    auto cyc = cycles(g.sigma);
    std::uint64_t D = 1;
    for (const auto& c : cyc) D = lcm_u(D, c.size());
    {
        double big = std::pow(static_cast<double>(Q), static_cast<double>(D));
        if (big > static_cast<double>(kFieldCap)) cost_cap_exceeded("working field q^(r*lcm)", big);
    }
    // largest cycle last; it is eliminated through the table
    std::stable_sort(cyc.begin(), cyc.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    const std::size_t k = cyc.size();
    double cost = 0;
    for (const auto& c : cyc) cost += std::pow(static_cast<double>(Q), static_cast<double>(c.size())) * (c.size() + 2);
    cost += static_cast<double>(k) * Q * Q * Q + static_cast<double>(Q) * Q * std::min<double>(std::pow(Q, cyc.back().size()), Q * Q);
    require_cost("fixed_count", cost);

    auto big = field(inst.q, static_cast<std::uint32_t>(r * D));
    const std::uint64_t N = big->order();
    if (gcd_u(theta_exp, N) != 1) invalid_input("theta_exp", "must be coprime to the group order");
    const std::uint64_t jinv = static_cast<std::uint64_t>(invmod(static_cast<std::int64_t>(theta_exp % N), static_cast<std::int64_t>(N)));
    auto toH = [&](std::uint64_t e) { return static_cast<FqElem>(mulmod(e % N, theta_exp, N)); };
    auto fromH = [&](FqElem x) { return mulmod(x, jinv, N); };
    const std::uint64_t MQ = N / (Q - 1);

    SubfieldArith A;
    A.Q = Q;
    A.Z = static_cast<std::uint32_t>(Q - 1);
    A.zech.assign(Q - 1, 0);
    auto to_index = [&](FqElem x) -> std::uint32_t {
        if (x == kZero) return A.Z;
        std::uint64_t e = fromH(x);
        if (e % MQ) check_failed("fixed_count", "value outside the base field");
        return static_cast<std::uint32_t>(e / MQ);
    };
    for (std::uint64_t i = 0; i + 1 < Q; ++i) A.zech[i] = to_index(big->add(0, toH(MQ * i)));
    A.neg_one = static_cast<std::uint32_t>((Q - 1) / 2);

    auto base = field(inst.q, 1);
    std::uint32_t w0enc = base->to_enc(nth_roots(*base, n)[1]);
    std::uint64_t w0 = fromH(big->from_int(w0enc));
    if (w0 % (N / n)) check_failed("fixed_count", "root of unity outside mu_n");
    const std::uint64_t k0 = w0 / (N / n);
    std::vector<std::int64_t> tp(n);
    for (int i = 0; i < n; ++i) tp[i] = mod(static_cast<std::int64_t>(g.t[i]) * static_cast<std::int64_t>(k0), n);

    // constant C in F_Q
    std::int64_t zsum = 0, kexp = 0;
    std::vector<std::uint64_t> logB(k), Rc(k);
    for (std::size_t c = 0; c < k; ++c) {
        const auto& mem = cyc[c];
        std::int64_t z = 0;
        for (int i : mem) z += tp[i];
        zsum += z;
        std::int64_t acc = 0;
        for (std::size_t kk = 1; kk < mem.size(); ++kk) {
            acc += tp[mem[kk]];
            kexp -= acc;
        }
        std::uint64_t Qd = powu(Q, static_cast<unsigned>(mem.size()));
        Rc[c] = N / (Qd - 1);
        logB[c] = mulmod(Rc[c], static_cast<std::uint64_t>(z), N);
    }
    if (zsum % n) check_failed("fixed_count", "twist exponents do not sum to 0 mod n");
    std::uint64_t logC = fromH(big->from_int(static_cast<std::int64_t>(n) * inst.psi));
    logC = (logC + mulmod(MQ, static_cast<std::uint64_t>(zsum / n), N)) % N;
    logC = (logC + mulmod(N / n, static_cast<std::uint64_t>(mod(kexp, n)), N)) % N;
    if (logC % MQ) check_failed("fixed_count", "product coefficient outside the base field");
    const std::uint32_t C = static_cast<std::uint32_t>(logC / MQ);

    const std::uint64_t QM1 = Q - 1;
    auto u_of = [&](std::size_t c, std::uint64_t kk) {
        const std::size_t d = cyc[c].size();
        std::uint64_t e = (logB[c] + mulmod(mulmod(Rc[c], kk, N), static_cast<std::uint64_t>(n), N)) % N;
        FqElem acc = kZero;
        for (std::size_t m = 0; m < d; ++m) {
            acc = big->add(acc, toH(e));
            e = mulmod(e, Q, N);
        }
        return to_index(acc);
    };

    // per-cycle distributions
    struct Pair {
        std::uint32_t u, v;
        std::uint64_t cnt;
    };
    std::vector<std::vector<Pair>> pairs(k);
    std::vector<std::vector<std::uint64_t>> Uall(k, std::vector<std::uint64_t>(Q, 0)), Unz(k, std::vector<std::uint64_t>(Q, 0));
    for (std::size_t c = 0; c < k; ++c) {
        std::uint64_t Qd = powu(Q, static_cast<unsigned>(cyc[c].size()));
        std::map<std::uint64_t, std::uint64_t> hist;
        for (std::uint64_t kk = 0; kk + 1 < Qd; ++kk) {
            std::uint32_t u = u_of(c, kk);
            std::uint32_t v = static_cast<std::uint32_t>(kk % QM1);
            ++hist[static_cast<std::uint64_t>(u) * QM1 + v];
            ++Unz[c][u];
            ++Uall[c][u];
        }
        ++Uall[c][A.Z];
        for (const auto& [key, cnt] : hist)
            pairs[c].push_back(Pair{static_cast<std::uint32_t>(key / QM1), static_cast<std::uint32_t>(key % QM1), cnt});
    }

    // all coordinates nonzero
    BigInt N1 = 0;
    if (k == 1) {
        for (const auto& pr : pairs[0])
            if (pr.u == A.mul(C, pr.v)) N1 += pr.cnt;
    } else {
        std::vector<std::uint64_t> st(Q * QM1, 0), nx(Q * QM1, 0);
        std::uint64_t reps = (powu(Q, static_cast<unsigned>(cyc[0].size())) - 1) / QM1;
        for (std::uint64_t kk = 0; kk < reps; ++kk) {
            std::uint32_t u = u_of(0, kk);
            ++st[static_cast<std::uint64_t>(u) * QM1 + kk % QM1];
        }
        for (std::size_t c = 1; c + 1 < k; ++c) {
            std::fill(nx.begin(), nx.end(), 0);
            for (std::uint32_t S = 0; S < Q; ++S)
                for (std::uint32_t P = 0; P < QM1; ++P) {
                    std::uint64_t cnt = st[static_cast<std::uint64_t>(S) * QM1 + P];
                    if (!cnt) continue;
                    for (const auto& pr : pairs[c]) {
                        std::uint32_t S2 = A.add(S, pr.u);
                        std::uint32_t P2 = A.mul(P, pr.v);
                        nx[static_cast<std::uint64_t>(S2) * QM1 + P2] += cnt * pr.cnt;
                    }
                }
            std::swap(st, nx);
        }
        // T[b][s] = #{y != 0 in the last cycle : u - b v + s = 0}
        std::vector<std::uint64_t> T(QM1 * Q, 0);
        for (std::uint32_t b = 0; b < QM1; ++b)
            for (const auto& pr : pairs[k - 1]) {
                std::uint32_t s = A.add(A.mul(b, pr.v), A.neg(pr.u));
                T[static_cast<std::uint64_t>(b) * Q + s] += pr.cnt;
            }
        BigInt acc = 0;
        for (std::uint32_t S = 0; S < Q; ++S)
            for (std::uint32_t P = 0; P < QM1; ++P) {
                std::uint64_t cnt = st[static_cast<std::uint64_t>(S) * QM1 + P];
                if (!cnt) continue;
                acc += BigInt(cnt) * T[static_cast<std::uint64_t>(A.mul(C, P)) * Q + S];
            }
        N1 = acc * QM1;
    }

    // some but not all coordinates zero: the product vanishes
    auto convolve = [&](const std::vector<std::vector<std::uint64_t>>& dist) {
        std::vector<BigInt> cur(Q, 0);
        cur[A.Z] = 1;
        for (const auto& dcy : dist) {
            std::vector<BigInt> nxt(Q, 0);
            for (std::uint32_t a = 0; a < Q; ++a) {
                if (cur[a] == 0) continue;
                for (std::uint32_t b = 0; b < Q; ++b)
                    if (dcy[b]) nxt[A.add(a, b)] += cur[a] * dcy[b];
            }
            cur = std::move(nxt);
        }
        return cur[A.Z];
    };
    BigInt N2 = (convolve(Uall) - 1) - convolve(Unz);
    BigInt total = N1 + N2;
    if (total % QM1 != 0) check_failed("fixed_count", "solution count not divisible by Q-1");
    return total / QM1;
}

BigInt fixed_count_A(const DworkInstance& inst, const std::vector<int>& t, int r, std::uint64_t theta_exp) {
    return fixed_count_general(inst, make_element(inst.n, t, identity_perm(inst.n)), r, theta_exp);
}

BigInt twisted_trace(const DworkInstance& inst, const GroupElement& g, int r) {
    CacheKey key{inst.n, inst.q, inst.psi, r, g.t, g.sigma};
    {
        std::lock_guard<std::mutex> lock(g_cache_mu);
        auto it = g_cache.find(key);
        if (it != g_cache.end()) return it->second;
    }
    const std::uint64_t Q = field_size(inst, r);
    BigInt fix = fixed_count_general(inst, g, r);
    BigInt base = 0, pw = 1;
    for (int j = 0; j <= inst.n - 2; ++j) {
        base += pw;
        pw *= Q;
    }
    BigInt T = fix - base;
    if (inst.n % 2) T = -T;
    BigInt dim = prim_dimension(inst.n);
    if (T * T > dim * dim * big_pow(BigInt(Q), inst.n - 2))
        check_failed("weil_bound", "twisted trace " + T.str() + " exceeds dim * Q^((n-2)/2)");
    std::lock_guard<std::mutex> lock(g_cache_mu);
    g_cache.emplace(key, T);
    return T;
}

Rational weighted_trace(const DworkInstance& inst, const ClassFunction& weights, int r) {
    if (weights.n != inst.n) invalid_input("weights", "degree mismatch");
    std::vector<std::size_t> todo;
    for (std::size_t i = 0; i < weights.entries.size(); ++i)
        if (weights.entries[i].weight != 0) todo.push_back(i);
    std::vector<BigInt> vals(weights.entries.size(), 0);
    const int J = std::max(1, std::min<int>(jobs(), static_cast<int>(todo.size())));
    if (J == 1) {
        for (auto i : todo) vals[i] = twisted_trace(inst, weights.entries[i].rep, r);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errs(J);
        for (int w = 0; w < J; ++w)
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t x = w; x < todo.size(); x += J)
                        vals[todo[x]] = twisted_trace(inst, weights.entries[todo[x]].rep, r);
                } catch (...) {
                    errs[w] = std::current_exception();
                }
            });
        for (auto& th : pool) th.join();
        for (auto& e : errs)
            if (e) std::rethrow_exception(e);
    }
    Rational s = 0;
    for (auto i : todo) s += weights.entries[i].weight * Rational(weights.entries[i].size) * Rational(vals[i]);
    return s;
}

}  // namespace dwork
