#include "tilearith/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>

#include "tilearith/decode.hpp"
#include "tilearith/parse.hpp"
#include "tilearith/render.hpp"
#include "tilearith/sim.hpp"
#include "tilearith/xgrow.hpp"

namespace tilearith {

namespace {

constexpr int kOk = 0;
constexpr int kParseExit = 2;
constexpr int kCompileExit = 3;
constexpr int kSimulateExit = 4;
constexpr int kDecodeExit = 5;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  bool simulate = cfg.simulate || !cfg.render_path.empty() ||
                  !cfg.trace_path.empty();
  if (!cfg.emit && !simulate) {
    err << "nothing to do: pass --emit and/or --simulate\n";
    return kParseExit;
  }

  ExpressionSpec spec;
  try {
    spec = parse(cfg.expression);
  } catch (const ParseError& e) {
    err << "parse error at position " << e.pos << ": " << e.what() << "\n";
    return kParseExit;
  }
  if (spec.kind == ExprKind::Add) {
    if (cfg.variant == "eight") spec.add.variant = AddVariant::EightTile;
    else if (cfg.variant == "six") spec.add.variant = AddVariant::SixTile;
    else if (cfg.variant == "L") spec.add.variant = AddVariant::LType;
    else {
      err << "unknown variant `" << cfg.variant << "` (eight|six|L)\n";
      return kParseExit;
    }
  }

  // A zero factor has no tile construction; the answer needs no assembly.
  if (spec.kind == ExprKind::Mul) {
    for (std::uint64_t v : spec.mul.inputs)
      if (v == 0) {
        err << "warning: zero operand, product is 0 without compiling\n";
        out << "result=0\n";
        return kOk;
      }
  }

  CompiledSystem compiled;
  try {
    compiled = compile(spec);
  } catch (const CompileError& e) {
    err << "compile error: " << e.what() << "\n";
    return kCompileExit;
  }
  compiled.system.temperature = cfg.temperature;

  if (cfg.emit) {
    std::string dir = cfg.out_dir;
    if (dir.empty()) {
      const char* env = std::getenv("TILEARITH_OUT_DIR");
      dir = env ? env : ".";
    }
    std::string path = cfg.emit_path.empty()
                           ? dir + "/" + tiles_filename(spec)
                           : cfg.emit_path;
    try {
      write_file(path, emit_tiles(compiled.system));
    } catch (const std::exception& e) {
      err << "emit failed: " << e.what() << "\n";
      return kCompileExit;
    }
    out << path << "\n";
  }

  if (!simulate) return kOk;

  SimulationReport report;
  try {
    long max_steps = cfg.max_steps > 0 ? cfg.max_steps
                                       : compiled.layout.default_max_steps();
    report = grow(compiled.system, max_steps);
  } catch (const std::exception& e) {
    err << "simulate error: " << e.what() << "\n";
    return kSimulateExit;
  }
  if (!cfg.trace_path.empty()) write_file(cfg.trace_path, dump_trace(report.trace));
  if (!cfg.render_path.empty()) {
    bool ppm = cfg.render_path.size() > 4 &&
               cfg.render_path.rfind(".ppm") == cfg.render_path.size() - 4;
    write_file(cfg.render_path,
               ppm ? render_ppm(compiled.system, report.terminal)
                   : render_text(compiled.system, report.terminal));
  }
  if (!report.halted) {
    err << "simulate error: growth did not halt within the step budget\n";
    return kSimulateExit;
  }
  if (!report.deterministic) {
    err << "simulate error: system is nondeterministic\n";
    return kSimulateExit;
  }
  if (!cfg.simulate) return kOk;

  DecodedResult result;
  try {
    result = decode(compiled.layout, compiled.system, report.terminal);
  } catch (const DecodeError& e) {
    err << "decode error: " << e.what() << "\n";
    return kDecodeExit;
  }
  switch (result.kind) {
    case ExprKind::Add:
    case ExprKind::Mul:
      out << "result=" << result.value << "\n";
      break;
    case ExprKind::Signed:
      out << "result=" << result.value << "\n";
      out << "sign=" << (result.sign < 0 ? "-" : "+") << "\n";
      break;
    case ExprKind::SignedMod:
      out << "remainder=" << *result.remainder << "\n";
      out << "sign=" << (result.sign < 0 ? "-" : "+") << "\n";
      break;
    case ExprKind::Prime:
      out << "prime=" << (*result.prime ? "yes" : "no") << "\n";
      break;
  }
  return kOk;
}

}  // namespace tilearith
