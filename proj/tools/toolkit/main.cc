// tools/toolkit/main.cc

// Copyright 2026  The cstk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <iostream>

#include "spdlog/sinks/stdout_color_sinks.h"
#include "spdlog/spdlog.h"

#include "common.h"
#include "cstk/base/error.h"

namespace {

constexpr int kExitDomainError = 1;
constexpr int kExitUsage = 2;

int Run(int argc, char **argv) {
  using namespace cstk::toolkit;
  CLI::App app("Code-switched speech recognition toolkit", "toolkit");
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");
  app.set_config("--config", "", "INI or TOML file with option defaults")
      ->envname("CSTK_CONFIG");

  GlobalOptions global;
  std::string format = "plain";
  app.add_option("--log-level", global.log_level, "Logging level")
      ->capture_default_str()
      ->check(CLI::IsMember({"trace", "debug", "info", "warn", "error", "off"}));
  app.add_option("--seed", global.seed, "Seed for every seeded operation")->capture_default_str();
  app.add_option("--threads", global.threads, "Worker threads")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--format", format, "Output of reporting commands")
      ->capture_default_str()
      ->check(CLI::IsMember({"plain", "records"}));

  CommandTable table;
  AddCorpusCommands(&app, &global, &table);
  AddModelCommands(&app, &global, &table);
  AddEvalCommands(&app, &global, &table);

  try {
    app.parse(argc, argv);
    global.format = format == "records" ? OutputFormat::kRecords : OutputFormat::kPlain;
    spdlog::set_level(spdlog::level::from_str(global.log_level));
    table.RunParsed();
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    std::cerr << e.what() << "\n\n";
    const CLI::App *failed = &app;
    for (const CLI::App *sub = &app; sub != nullptr;) {
      failed = sub;
      const auto parsed = sub->get_subcommands();
      sub = parsed.empty() ? nullptr : parsed.front();
    }
    std::cerr << failed->help();
    return kExitUsage;
  } catch (const cstk::Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomainError;
  } catch (const std::filesystem::filesystem_error &e) {
    std::cerr << "error: IoError: " << e.what() << "\n";
    return kExitDomainError;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  spdlog::set_default_logger(spdlog::stderr_color_st("toolkit"));
  return Run(argc, argv);
}
