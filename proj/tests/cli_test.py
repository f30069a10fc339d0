# Copyright 2026 The cfgkit Authors
# SPDX-License-Identifier: Apache-2.0
"""End-to-end checks of the cfgkit command-line tool: exit codes, output
formats and determinism."""

import json
import os
import subprocess
import sys
import tempfile
import unittest

BIN = sys.argv[1] if len(sys.argv) > 1 else "cfgkit"
FIX = sys.argv[2] if len(sys.argv) > 2 else os.path.join(os.path.dirname(__file__), "fixtures")


def run(*args, env=None):
    e = dict(os.environ)
    e.pop("CFGKIT_CAP", None)
    e.update(env or {})
    p = subprocess.run([BIN, *args], capture_output=True, text=True, env=e)
    return p.returncode, p.stdout, p.stderr


def fx(name):
    return os.path.join(FIX, name)


class Cli(unittest.TestCase):
    def test_recognize_diamond(self):
        code, out, _ = run("recognize", "--model", "cfg", "-i", fx("diamond.lattice"))
        self.assertEqual(code, 0)
        self.assertIn("a __sink 1", out)
        self.assertIn("b __sink 1", out)

    def test_asm_rejection_certificate(self):
        code, out, _ = run("recognize", "--model", "asm", "-i", fx("asm_strictness.lattice"), "-f", "machine")
        self.assertEqual(code, 1)
        res = json.loads(out)["results"][0]
        self.assertEqual(res["decision"], "rejected")
        self.assertEqual(res["certificate"]["message"], "Omega infeasible")

    def test_check_uld_rejects_m3(self):
        code, _, err = run("check-uld", "-i", fx("m3.lattice"))
        self.assertEqual(code, 2)
        self.assertIn("cover", err)

    def test_invalid_inputs(self):
        self.assertEqual(run("check-uld", "-i", fx("bowtie.lattice"))[0], 2)
        code, _, err = run("check-uld", "-i", fx("bad_syntax.lattice"))
        self.assertEqual(code, 2)
        self.assertIn("line 2", err)
        self.assertEqual(run("check-uld", "-i", fx("does_not_exist"))[0], 2)
        self.assertEqual(run("recognize", "--model", "nope", "-i", fx("diamond.lattice"))[0], 2)

    def test_model_all_respects_inclusion_chain(self):
        order = ["cfg", "asm", "acfg"]
        for name in ["diamond.lattice", "running.lattice", "asm_strictness.lattice"]:
            code, out, _ = run("recognize", "--model", "all", "--verify", "-i", fx(name), "-f", "machine")
            self.assertIn(code, (0, 1))
            decisions = {r["model"]: r["decision"] == "accepted" for r in json.loads(out)["results"]}
            self.assertEqual(sorted(decisions), sorted(order))
            self.assertTrue(decisions["asm"] or not decisions["acfg"], name)
            self.assertTrue(decisions["cfg"] or not decisions["asm"], name)
            self.assertEqual(code, 0 if all(decisions.values()) else 1)

    def test_running_lattice_strictness(self):
        code, out, _ = run("recognize", "--model", "all", "-i", fx("running.lattice"), "-f", "machine")
        decisions = {r["model"]: r["decision"] for r in json.loads(out)["results"]}
        self.assertEqual(decisions, {"cfg": "accepted", "asm": "accepted", "acfg": "rejected"})

    def test_machine_output_is_deterministic(self):
        a = run("recognize", "--model", "all", "-i", fx("running.lattice"), "-f", "machine")
        b = run("recognize", "--model", "all", "-i", fx("running.lattice"), "-f", "machine")
        self.assertEqual(a, b)

    def test_systems_dump(self):
        code, out, _ = run("systems", "--which", "Omega", "-i", fx("running.lattice"))
        self.assertEqual(code, 0)
        self.assertIn("e[c6->c7] = e[c7->c6]", out)
        self.assertEqual(len([l for l in out.splitlines() if l and not l.startswith("#")]), 9)

    def test_simulate_round_trip(self):
        code, out, _ = run("simulate", "-g", fx("running.graph"), "-c", fx("running.config"))
        self.assertEqual(code, 0)
        with open(fx("running.lattice")) as f:
            self.assertEqual(out, f.read())
        code, _, err = run("simulate", "-g", fx("running.graph"), "-c", fx("running.config"), "--cap", "3")
        self.assertEqual(code, 2)
        self.assertIn("cap", err)

    def test_cap_from_environment(self):
        code, _, _ = run("simulate", "-g", fx("running.graph"), "-c", fx("running.config"), env={"CFGKIT_CAP": "3"})
        self.assertEqual(code, 2)
        code, _, _ = run("simulate", "-g", fx("running.graph"), "-c", fx("running.config"), "--cap", "50",
                         env={"CFGKIT_CAP": "3"})
        self.assertEqual(code, 0)

    def test_verify_subcommand(self):
        args = ["verify", "-i", fx("running.lattice"), "-g", fx("running.graph"), "-c", fx("running.config")]
        code, out, _ = run(*args, "--model", "asm")
        self.assertEqual(code, 0, out)
        code, out, _ = run(*args, "--model", "acfg", "-f", "machine")
        self.assertEqual(code, 1)
        self.assertEqual(json.loads(out)["failed_stage"], 1)
        code, out, _ = run("verify", "-i", fx("diamond.lattice"), "-g", fx("running.graph"), "-c", fx("running.config"),
                           "-f", "machine")
        self.assertEqual(code, 1)
        self.assertEqual(json.loads(out)["failed_stage"], 4)

    def test_gen_random(self):
        with tempfile.TemporaryDirectory() as d:
            code, _, _ = run("gen-random", "--seed", "3", "--count", "5", "-o", d)
            self.assertEqual(code, 0)
            lattices = sorted(f for f in os.listdir(d) if f.endswith(".lattice"))
            self.assertEqual(len(lattices), 5)
            for name in lattices:
                code, _, err = run("recognize", "--model", "cfg", "--verify", "-i", os.path.join(d, name))
                self.assertEqual(code, 0, err)
        self.assertEqual(run("gen-random", "--seed", "3", "--count", "2"), run("gen-random", "--seed", "3", "--count", "2"))

    def test_stdin_and_dot(self):
        with open(fx("diamond.lattice")) as f:
            p = subprocess.run([BIN, "recognize", "-m", "cfg", "-f", "dot"], stdin=f, capture_output=True, text=True)
        self.assertEqual(p.returncode, 0)
        self.assertTrue(p.stdout.startswith("digraph"))


if __name__ == "__main__":
    unittest.main(argv=[sys.argv[0]], verbosity=2)
