#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tilearith/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "tilearith: compile arithmetic and primality problems to tile "
      "assembly systems, simulate them, and emit xgrow .tiles files"};

  tilearith::RunConfig cfg;
  std::vector<std::string> expr_parts;
  app.add_option("expression", expr_parts,
                 "expression, e.g. `12+6+2+4`, `6-12+4-2 mod 3`, `5*4*3`, "
                 "`prime 5`")
      ->required();
  app.add_option("--variant", cfg.variant,
                 "addition construction: eight, six or L")
      ->default_val("eight");
  app.add_flag("--emit", cfg.emit, "write the .tiles file and print its path");
  app.add_option("--emit-path", cfg.emit_path, "explicit .tiles output path");
  app.add_flag("--simulate", cfg.simulate,
               "grow to the terminal assembly and decode the answer");
  app.add_option("--render", cfg.render_path,
                 "write a render of the terminal assembly (.ppm = image, "
                 "otherwise text)");
  app.add_option("--trace", cfg.trace_path, "write the attachment trace");
  app.add_option("--max-steps", cfg.max_steps,
                 "attachment budget (default 16 x expected area)");
  app.add_option("--temperature", cfg.temperature, "system temperature")
      ->default_val(2);
  app.add_option("--out", cfg.out_dir,
                 "output directory for --emit (default $TILEARITH_OUT_DIR "
                 "or .)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::string expression;
  for (size_t i = 0; i < expr_parts.size(); ++i) {
    if (i) expression += " ";
    expression += expr_parts[i];
  }
  cfg.expression = expression;
  if (!cfg.emit_path.empty()) cfg.emit = true;
  return tilearith::run(cfg, std::cout, std::cerr);
}
