// Copyright 2026 The hasPartKB Pipeline Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "haspart/external_scorer.hpp"

#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>

#include "json.hpp"

namespace haspart {

using nlohmann::json;

std::string ScoreRequestJson(const std::string& id,
                             const std::string& marked_text) {
  json j;
  j["id"] = id;
  j["marked_text"] = marked_text;
  return j.dump();
}

double ParseScoreResponse(const std::string& line,
                          const std::string& expected_id) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    throw ScorerUnavailableError(std::string("malformed response: ") + e.what());
  }
  if (!j.contains("id") || !j.contains("score") || !j["score"].is_number())
    throw ScorerUnavailableError("response missing id or numeric score");
  if (j["id"].get<std::string>() != expected_id)
    throw ScorerUnavailableError("response id mismatch");
  return j["score"].get<double>();
}

ExternalScorer::ExternalScorer(ExternalScorerConfig config)
    : config_(std::move(config)) {
  if (config_.command.empty())
    throw ScorerUnavailableError("empty scorer command");
}

ExternalScorer::~ExternalScorer() { Stop(); }

void ExternalScorer::Start() {
  int to_pipe[2];
  int from_pipe[2];
  if (pipe(to_pipe) != 0 || pipe(from_pipe) != 0)
    throw ScorerUnavailableError("pipe() failed");
  pid_t pid = fork();
  if (pid < 0) throw ScorerUnavailableError("fork() failed");
  if (pid == 0) {
    dup2(to_pipe[0], STDIN_FILENO);
    dup2(from_pipe[1], STDOUT_FILENO);
    close(to_pipe[0]);
    close(to_pipe[1]);
    close(from_pipe[0]);
    close(from_pipe[1]);
    std::vector<char*> argv;
    for (auto& arg : config_.command) argv.push_back(const_cast<char*>(arg.c_str()));
    argv.push_back(nullptr);
    execvp(argv[0], argv.data());
    _exit(127);
  }
  close(to_pipe[0]);
  close(from_pipe[1]);
  child_pid_ = pid;
  to_child_ = to_pipe[1];
  from_child_ = from_pipe[0];
  read_buffer_.clear();
}

void ExternalScorer::Stop() {
  if (to_child_ >= 0) close(to_child_);
  if (from_child_ >= 0) close(from_child_);
  to_child_ = from_child_ = -1;
  if (child_pid_ > 0) {
    kill(child_pid_, SIGTERM);
    int status = 0;
    waitpid(child_pid_, &status, 0);
    child_pid_ = -1;
  }
}

double ExternalScorer::RoundTrip(const std::string& id,
                                 const std::string& marked_text) {
  if (child_pid_ < 0) Start();
  std::string request = ScoreRequestJson(id, marked_text) + "\n";
  ssize_t written = write(to_child_, request.data(), request.size());
  if (written != static_cast<ssize_t>(request.size()))
    throw ScorerUnavailableError("write to scorer failed");

  // Read one newline-terminated response within the timeout.
  while (true) {
    size_t nl = read_buffer_.find('\n');
    if (nl != std::string::npos) {
      std::string line = read_buffer_.substr(0, nl);
      read_buffer_.erase(0, nl + 1);
      return ParseScoreResponse(line, id);
    }
    struct pollfd pfd {from_child_, POLLIN, 0};
    int rc = poll(&pfd, 1, config_.timeout_ms);
    if (rc == 0) throw ScorerUnavailableError("timeout waiting for response");
    if (rc < 0) throw ScorerUnavailableError(std::strerror(errno));
    char buf[4096];
    ssize_t n = read(from_child_, buf, sizeof(buf));
    if (n <= 0) throw ScorerUnavailableError("scorer closed its output");
    read_buffer_.append(buf, static_cast<size_t>(n));
  }
}

double ExternalScorer::ScoreMarked(const std::string& id,
                                   const std::string& marked_text) {
  std::string last_error;
  for (int attempt = 0; attempt <= config_.retries; ++attempt) {
    try {
      return RoundTrip(id, marked_text);
    } catch (const ScorerUnavailableError& e) {
      last_error = e.what();
      Stop();  // restart the subprocess on the next attempt
    }
  }
  throw ScorerUnavailableError(last_error);
}

double ExternalScorer::ScorePair(const GenericSentence& sentence,
                                 const CandidatePair& pair) {
  MarkedSentence marked = MarkArguments(sentence, pair);
  std::string id = sentence.id + "#" + std::to_string(request_counter_++);
  return ScoreMarked(id, marked.text);
}

}  // namespace haspart
