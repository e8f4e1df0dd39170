#!/usr/bin/env python3
"""Regenerate the bundled corpora under data/ (fully deterministic)."""

from __future__ import annotations

import os

HERE = os.path.dirname(os.path.abspath(__file__))
DATA = os.path.join(HERE, "..", "data")

SEMDB = "http://semdb.example.org/"
LUBM = "http://lubm.example.org/"
RDF_TYPE = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type"

DEMO = """\
# Hand-written 30-triple demo corpus (clinical-registry flavor).
<http://semdb.example.org/SurgeryProcedure:236> <http://semdb.example.org/SurgeryProcedureClass> "cardiac valve" .
<http://semdb.example.org/SurgeryProcedure:236> <http://semdb.example.org/CardiacValveEtiology> "other" .
<http://semdb.example.org/SurgeryProcedure:236> <http://semdb.example.org/belongsToEvent> <http://semdb.example.org/Event:184> .
<http://semdb.example.org/SurgeryProcedure:236> <http://semdb.example.org/SurgeryProcedureDescription> "pulmonary valve repair" .
<http://semdb.example.org/SurgeryProcedure:236> <http://semdb.example.org/CardiacValveStatus> "native" .
<http://semdb.example.org/SurgeryProcedure:104> <http://semdb.example.org/SurgeryProcedureClass> "cardiac valve" .
<http://semdb.example.org/SurgeryProcedure:104> <http://semdb.example.org/CardiacValveEtiology> "rheumatic" .
<http://semdb.example.org/SurgeryProcedure:104> <http://semdb.example.org/belongsToEvent> <http://semdb.example.org/Event:81> .
<http://semdb.example.org/SurgeryProcedure:104> <http://semdb.example.org/SurgeryProcedureDescription> "mitral valve repair" .
<http://semdb.example.org/SurgeryProcedure:104> <http://semdb.example.org/CardiacValveStatus> "native" .
<http://semdb.example.org/SurgeryProcedure:310> <http://semdb.example.org/SurgeryProcedureClass> "coronary artery bypass" .
<http://semdb.example.org/SurgeryProcedure:310> <http://semdb.example.org/belongsToEvent> <http://semdb.example.org/Event:184> .
<http://semdb.example.org/SurgeryProcedure:310> <http://semdb.example.org/SurgeryProcedureDescription> "coronary artery bypass graft" .
<http://semdb.example.org/SurgeryProcedure:310> <http://semdb.example.org/VesselsNumber> "three" .
<http://semdb.example.org/SurgeryProcedure:310> <http://semdb.example.org/GraftType> "arterial" .
<http://semdb.example.org/SurgeryProcedure:422> <http://semdb.example.org/SurgeryProcedureClass> "coronary artery bypass" .
<http://semdb.example.org/SurgeryProcedure:422> <http://semdb.example.org/belongsToEvent> <http://semdb.example.org/Event:81> .
<http://semdb.example.org/SurgeryProcedure:422> <http://semdb.example.org/SurgeryProcedureDescription> "coronary artery bypass graft x2" .
<http://semdb.example.org/SurgeryProcedure:422> <http://semdb.example.org/VesselsNumber> "two" .
<http://semdb.example.org/SurgeryProcedure:422> <http://semdb.example.org/GraftType> "arterial" .
<http://semdb.example.org/VascularProcedure:77> <http://semdb.example.org/VascularProcedureClass> "aneurysm repair" .
<http://semdb.example.org/VascularProcedure:77> <http://semdb.example.org/belongsToEvent> <http://semdb.example.org/Event:184> .
<http://semdb.example.org/VascularProcedure:88> <http://semdb.example.org/VascularProcedureClass> "aneurysm repair" .
<http://semdb.example.org/VascularProcedure:88> <http://semdb.example.org/belongsToEvent> <http://semdb.example.org/Event:81> .
<http://semdb.example.org/Event:184> <http://semdb.example.org/eventType> "surgery case" .
<http://semdb.example.org/Event:184> <http://semdb.example.org/belongsToPatient> <http://semdb.example.org/Patient:9> .
<http://semdb.example.org/Event:81> <http://semdb.example.org/eventType> "surgery case" .
<http://semdb.example.org/Event:81> <http://semdb.example.org/belongsToPatient> <http://semdb.example.org/Patient:12> .
<http://semdb.example.org/Patient:9> <http://semdb.example.org/patientClass> "adult cardiac" .
<http://semdb.example.org/Patient:12> <http://semdb.example.org/patientClass> "adult cardiac" .
"""


def lubm_like() -> list[str]:
    t = []

    def add(s, p, o):
        t.append(f"<{LUBM}{s}> <{LUBM}{p}> {o} .")

    def add_type(s, cls):
        t.append(f"<{LUBM}{s}> <{RDF_TYPE}> <{LUBM}{cls}> .")

    # Reference chains form a DAG (students -> courses -> professors ->
    # departments) so the similarity fixed point settles in few iterations.
    for di in range(4):
        dept = f"Department{di}"
        add(dept, "name", f'"department {di}"')
        add_type(dept, "Department")
    for pi in range(8):
        prof = f"Professor{pi}"
        add(prof, "name", f'"professor {pi}"')
        add(prof, "worksFor", f"<{LUBM}Department{pi % 4}>")
        add(prof, "emailAddress", f'"professor{pi}@department{pi % 4}.example.edu"')
        add_type(prof, "FullProfessor")
    for ci in range(20):
        course = f"Course{ci}"
        # two courses carry no name triple, keeping name non-universal
        if ci not in (18, 19):
            add(course, "name", f'"course {ci}"')
        add(course, "taughtBy", f"<{LUBM}Professor{ci % 8}>")
        add_type(course, "Course")
    for si in range(40):
        s = f"Student{si}"
        add(s, "telephone", '"xxx-xxx-xxxx"')
        add(s, "memberOf", f"<{LUBM}Department{si % 4}>")
        for k in range(1 + si % 3):
            add(s, "takesCourse", f"<{LUBM}Course{(si + 7 * k) % 20}>")
        add(s, "name", f'"undergraduate student {si}"')
        add(s, "emailAddress", f'"student{si}@department{si % 4}.example.edu"')
        add_type(s, "UndergraduateStudent")
    for gi in range(10):
        s = f"GradStudent{gi}"
        add(s, "telephone", '"xxx-xxx-xxxx"')
        add(s, "memberOf", f"<{LUBM}Department{gi % 4}>")
        add(s, "advisor", f"<{LUBM}Professor{gi % 8}>")
        add(s, "takesCourse", f"<{LUBM}Course{(3 * gi) % 20}>")
        add(s, "name", f'"graduate student {gi}"')
        add(s, "emailAddress", f'"gradstudent{gi}@department{gi % 4}.example.edu"')
        add_type(s, "GraduateStudent")
    return t


def semdb_like() -> list[str]:
    t = []

    def add(s, p, o):
        t.append(f"<{SEMDB}{s}> <{SEMDB}{p}> {o} .")

    def add_type(s, cls):
        t.append(f"<{SEMDB}{s}> <{RDF_TYPE}> <{SEMDB}{cls}> .")

    valve_kinds = ["mitral", "aortic", "pulmonary", "tricuspid"]
    etiologies = ["rheumatic", "degenerative", "congenital", "other"]
    for i in range(24):
        s = f"SurgeryProcedure:{100 + i}"
        kind = valve_kinds[i % 4]
        add(s, "SurgeryProcedureClass", '"cardiac valve"')
        add(s, "CardiacValveEtiology", f'"{etiologies[i % 4]}"')
        add(s, "belongsToEvent", f"<{SEMDB}Event:{200 + i % 12}>")
        add(s, "SurgeryProcedureDescription", f'"{kind} valve repair"')
        add(s, "CardiacValveStatus", '"native"')
        add_type(s, "SurgeryProcedure")
    for i in range(8):
        s = f"VascularProcedure:{300 + i}"
        add(s, "VascularProcedureClass", '"aneurysm repair"')
        add(s, "belongsToEvent", f"<{SEMDB}Event:{200 + i % 12}>")
        add(s, "VascularSite", f'"{["aortic", "carotid"][i % 2]} segment"')
        add_type(s, "VascularProcedure")
    for i in range(12):
        s = f"Event:{200 + i}"
        add(s, "eventType", '"surgery case"')
        add(s, "belongsToPatient", f"<{SEMDB}Patient:{400 + i % 8}>")
        add(s, "eventStatus", '"closed"')
        add_type(s, "Event")
    for i in range(8):
        s = f"Patient:{400 + i}"
        add(s, "patientClass", '"adult cardiac"')
        add(s, "patientStatus", '"discharged"')
        add_type(s, "Patient")
    return t


def main() -> None:
    os.makedirs(DATA, exist_ok=True)
    with open(os.path.join(DATA, "demo.nt"), "w", encoding="utf-8") as fh:
        fh.write(DEMO)
    for name, rows in (("lubm_like.nt", lubm_like()),
                       ("semdb_like.nt", semdb_like())):
        with open(os.path.join(DATA, name), "w", encoding="utf-8") as fh:
            fh.write("\n".join(rows) + "\n")
        print(f"wrote {name}: {len(rows)} triples")


if __name__ == "__main__":
    main()
