#include "oracle.hpp"

#include <string>

namespace sixv::oracle {

namespace {

const char* const kProgram = R"(
(def a (x) (sinh (+ x gamma)))
(def b (x) (sinh x))
(def c () (sinh gamma))
(def ab (x) (/ (a x) (b x)))
(def pa (x) (prod q (range 0 (- L 1)) (a (- x (mu q)))))
(def pb (x) (prod q (range 0 (- L 1)) (b (- x (mu q)))))

(def Gamma (i j k)
  (* (/ (c) (b (- (lam k) (lam j))))
     (prod m (except (range 1 n) i)
       (* (ab (- (lam k) (lam m))) (ab (- (lam m) (lam j)))))))

(def Omega (i j)
  (* (/ (c) (a (- (lam j) (lam 0))))
     (/ (c) (a (- (lam 0) (lam i))))
     (ab (- (lam j) (lam i)))
     (prod m (except (range 0 n) i j)
       (* (ab (- (lam j) (lam m))) (ab (- (lam m) (lam i)))))))

(def M (i)
  (+ (* (Gamma i 0 i) (pa (lam 0)) (pb (lam i)))
     (* (Gamma i i 0) (pa (lam i)) (pb (lam 0)))))

(def N (j i)
  (+ (* (Omega i j) (pa (lam i)) (pb (lam j)))
     (* (Omega j i) (pa (lam j)) (pb (lam i)))))

(def rest () (diff (range 0 (- nvars 1)) I))

(def V ()
  (if (= (len I) 0) 1
    (sum J (subsets I (/ (len I) 2))
      (* (prod j J (* (pa (lam j)) (prod x (rest) (ab (- (lam x) (lam j))))))
         (sum K (perms (diff I J))
           (* (prod l (range 0 (- (len J) 1))
                (* (pb (lam (at K l)))
                   (/ (c) (b (- (lam (at J l)) (lam (at K l)))))
                   (prod x (rest) (ab (- (lam (at K l)) (lam x))))))
              (prod r (range 0 (- (len J) 1))
                (prod s (range (+ r 1) (- (len J) 1))
                  (* (ab (- (lam (at K r)) (lam (at K s))))
                     (ab (- (lam (at K r)) (lam (at J s))))
                     (/ (sinh (+ (- (lam (at K s)) (lam (at J r))) (* 2 gamma)))
                        (b (- (lam (at K s)) (lam (at J r))))))))))))))
)";

const Interpreter& interpreter() {
  static const Interpreter interp(kProgram);
  return interp;
}

Environment make_env(std::span<const cplx> vars, const ModelParams& p) {
  Environment env;
  env.lam.assign(vars.begin(), vars.end());
  env.mu = p.mu;
  env.scalars["gamma"] = p.gamma;
  env.scalars["L"] = cplx(p.L, 0.0);
  env.scalars["n"] = cplx(static_cast<double>(vars.size()) - 1.0, 0.0);
  env.scalars["nvars"] = cplx(static_cast<double>(vars.size()), 0.0);
  return env;
}

std::string call(const std::string& name, std::initializer_list<int> args) {
  std::string s = "(" + name;
  for (const int a : args) s += " " + std::to_string(a);
  return s + ")";
}

}  // namespace

const std::string& coefficient_program() {
  static const std::string text(kProgram);
  return text;
}

cplx gamma_coeff(int i, int j, int k, std::span<const cplx> vars, const ModelParams& p) {
  return interpreter().eval_complex(call("Gamma", {i, j, k}), make_env(vars, p));
}

cplx omega_coeff(int i, int j, std::span<const cplx> vars, const ModelParams& p) {
  return interpreter().eval_complex(call("Omega", {i, j}), make_env(vars, p));
}

cplx m_coeff(int i, std::span<const cplx> vars, const ModelParams& p) {
  return interpreter().eval_complex(call("M", {i}), make_env(vars, p));
}

cplx n_coeff(int j, int i, std::span<const cplx> vars, const ModelParams& p) {
  return interpreter().eval_complex(call("N", {j, i}), make_env(vars, p));
}

cplx v_coeff(std::span<const int> indices, std::span<const cplx> vars, const ModelParams& p) {
  Environment env = make_env(vars, p);
  env.scalars["I"] = IntList(indices.begin(), indices.end());
  return interpreter().eval_complex("(V)", env);
}

}  // namespace sixv::oracle
