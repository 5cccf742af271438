"""Raw data behind the built-in TestTDO v1.3 metamodel.

Everything the schema registry serves is declared here as plain tuples so the
tables stay diffable and greppable.  Term rows carry their taxonomy parents
inline; relationship rows carry the defining sentence they were extracted
from, because the multiplicity audit replays the extraction rule against that
exact sentence.

Multiplicity extraction rule (applied mechanically to each sentence):

* "a" / "an" / "by means of a" target          -> exactly one  (min 1, max 1)
* "one or more" / "one or several"             -> min 1, unbounded
* "none or many" / "none or several" / "if any"-> min 0, unbounded
* a modal "can"/"may" before the verb makes the lower bound 0
  ("can consume one or more ..." -> min 0, unbounded)

Inverse (source-side) lower bounds are enforced only for the three rows whose
definition adds an explicit "In turn, ..." sentence: involves, plays and
verifies_validates; every other row leaves the source side unconstrained.
"""

from __future__ import annotations

OWN = "own_or_extended"
REUSED = "reused"
STUB = "imported_stub"

# (canonical_name, display_name, synonyms, provenance, kind, parents, definition)
TERM_ROWS: tuple[tuple[str, str, tuple[str, ...], str, str, tuple[str, ...], str], ...] = (
    (
        "ActualResult", "Actual Result", (), "TestTDO", OWN, ("TestResult", "Outcome"),
        "It is a Test Result that represents a numerical or categorical value (expected or unexpected).",
    ),
    (
        "AnalyzeTestResults", "Analyze Test Results", ("Testing Analysis",), "TestTDO", OWN, ("TestingActivity",),
        "It is a Testing Activity that takes into account the specific Test Information Need in order to "
        "produce a Test Conclusion Report by consuming one or more Test Results and Test Specifications.",
    ),
    (
        "DesignTesting", "Design Testing", ("Testing Design",), "TestTDO", OWN, ("TestingActivity",),
        "It is a Testing Activity aimed at designing a set of Test Specifications (i.e., Test Cases, "
        "Test Suites and/or Test Checklists) as well as Realization Procedures.",
    ),
    (
        "DynamicTestingMethod", "Dynamic Testing Method", (), "TestTDO", OWN, ("TestingRealizationMethod",),
        "It is a Testing Realization Method for a task included in a Perform Dynamic Testing activity.",
    ),
    (
        "ExperienceBasedMethod", "Experience-based Method", (), "TestTDO", OWN, ("TestingDesignMethod",),
        "It is a Testing Design Method that uses the Testing Human Agent's knowledge, expertise and "
        "intuition while enacting the Design Testing activity for deriving Test Specifications.",
    ),
    (
        "Incident", "Incident", ("Anomaly", "Defect", "Issue Report"), "TestTDO", OWN, ("TestResult", "Artifact"),
        "It is a Test Result that reports deviations (e.g. between the expected result and the Actual "
        "Result), anomalies (e.g. an error or a failure) or other arisen issues during the Perform "
        "Testing activity.",
    ),
    (
        "PerformDynamicTesting", "Perform Dynamic Testing", ("Dynamic Testing",), "TestTDO", OWN, ("PerformTesting",),
        "It is a Perform Testing activity aimed at verifying/validating a Testable Entity against one or "
        "more Test Specifications with the execution of its software code.",
    ),
    (
        "PerformFunctionalDynamicTesting", "Perform Functional Dynamic Testing", ("Functional Dynamic Testing",),
        "TestTDO", OWN, ("PerformDynamicTesting",),
        "It is a Dynamic Testing activity aimed at verifying/validating the compliance of a Testable "
        "Entity with Functional Requirements.",
    ),
    (
        "PerformNonFunctionalDynamicTesting", "Perform Non-functional Dynamic Testing",
        ("Non-functional Dynamic Testing",), "TestTDO", OWN, ("PerformDynamicTesting",),
        "It is a Dynamic Testing activity aimed at appraising the compliance of a Testable Entity with "
        "Non-Functional Requirements.",
    ),
    (
        "PerformStaticTesting", "Perform Static Testing", ("Static Testing",), "TestTDO", OWN, ("PerformTesting",),
        "It is a Perform Testing activity aimed at checking a Testable Entity against one or more Test "
        "Specifications without the execution of its software code (if any).",
    ),
    (
        "PerformTesting", "Perform Testing", ("Testing Realization",), "TestTDO", OWN, ("TestingActivity",),
        "It is a Testing Activity aimed at enacting a Static or Dynamic Testing.",
    ),
    (
        "RealizationProcedure", "Realization Procedure", (), "TestTDO", OWN, ("Artifact",),
        "Arranged set of Testing Realization Method's instructions or operations, which specifies how "
        "must be performed the Perform Testing activity using the Test Specification.",
    ),
    (
        "SpecificationBasedMethod", "Specification-based Method", ("Black-box Method",), "TestTDO", OWN,
        ("TestingDesignMethod",),
        "It is a Testing Design Method that always uses a Test Basis while enacting the Design Testing "
        "activity for deriving Test Specifications without referring to the internal structure of the "
        "Testable Entity.",
    ),
    (
        "StaticTestingMethod", "Static Testing Method", (), "TestTDO", OWN, ("TestingRealizationMethod",),
        "It is a Testing Realization Method for a task included in a Perform Static Testing activity.",
    ),
    (
        "StructureBasedMethod", "Structure-based Method", ("White-box Method",), "TestTDO", OWN,
        ("TestingDesignMethod",),
        "It is a Testing Design Method that uses the internal structure of the Testable Entity, and "
        "sometimes also uses a Test Basis, while enacting the Design Testing activity for deriving "
        "Test Specifications.",
    ),
    (
        "TestBasis", "Test Basis", (), "TestTDO", OWN, ("Artifact",),
        "Artifact consumed by a Design Testing activity for designing the Test Cases and Checklists.",
    ),
    (
        "TestCase", "Test Case", (), "TestTDO", OWN, ("TestSpecification",),
        "It is a Test Specification that contains the necessary information (e.g. preconditions, inputs, "
        "expected results and postconditions) to perform mainly Dynamic Testing.",
    ),
    (
        "TestChecklist", "Test Checklist", (), "TestTDO", OWN, ("TestSpecification",),
        "It is a Test Specification that contains a list of items to be checked in order to perform "
        "mainly Static Testing.",
    ),
    (
        "TestConclusionReport", "Test Conclusion Report", (), "TestTDO", OWN, ("Artifact",),
        "It is an Artifact that documents the analysis of all Test Results.",
    ),
    (
        "TestContextEntity", "Test Context Entity", (), "TestTDO", OWN, ("ContextEntity",),
        "It represents the concrete Context Object in which the Testable Entity is situated.",
    ),
    (
        "TestGoal", "Test Goal", ("Test Objective",), "TestTDO", OWN, ("Goal",),
        "It is a business goal for testing that the organization intends to achieve.",
    ),
    (
        "TestInformationNeed", "Test Information Need", (), "TestTDO", OWN, ("InformationNeedGoal",),
        "It is an Information Need Goal that is achieved by conducting Testing Activities.",
    ),
    (
        "TestItem", "Test Item", (), "TestTDO", OWN, ("TestableEntity",),
        "A part of a Testable Entity, which is a Test Object as well.",
    ),
    (
        "TestParticularSituation", "Test Particular Situation", (), "TestTDO", OWN, ("ParticularSituation",),
        "It represents an association between one or more Testable Entities in the role of test target "
        "and none or many Test Context Entities in the role of test environment.",
    ),
    (
        "TestPlan", "Test Plan", (), "TestTDO", OWN, ("Artifact",),
        "The document (Artifact) that describes how the Test Project will be planned, scheduled, "
        "executed, monitored, and controlled.",
    ),
    (
        "TestProject", "Test Project", (), "TestTDO", OWN, ("Project",),
        "It is a Project representing a temporary and goal-oriented endeavor for testing with definite "
        "start and finish dates, which considers a managed set of interrelated Testing Activities, tasks "
        "and resources aimed at producing and modifying unique work products (e.g., Test Specifications, "
        "Test Results, etc.) for satisfying a given requester need.",
    ),
    (
        "TestRequirement", "Test Requirement", (), "TestTDO", OWN, (),
        "It states, taking into account the Test Goal purpose, what must be verified/validated of a "
        "Testable Entity (and/or Test Item) based on the Test Basis, if any.",
    ),
    (
        "TestResult", "Test Result", (), "TestTDO", OWN, ("WorkProduct",),
        "It is a Work Product that represents both an Incident (Artifact) and an Actual Result "
        "(Outcome), which is produced by running the Perform Testing activity.",
    ),
    (
        "TestSpecification", "Test Specification", (), "TestTDO", OWN, ("Artifact",),
        "It is an Artifact that represents Test Checklists, Test Cases and their grouping in Test Suites.",
    ),
    (
        "TestSuite", "Test Suite", ("Test Set",), "TestTDO", OWN, ("TestSpecification",),
        "It is a Test Specification that includes a set of one or more Test Cases with common "
        "constraints on their realization.",
    ),
    (
        "TestableEntity", "Testable Entity", ("Test Object",), "TestTDO", OWN, (),
        "A concrete object able to be tested.",
    ),
    (
        "Testing", "Testing", ("Testing Process",), "TestTDO", OWN, ("WorkProcess",),
        "It is a process (Work Process) that is composed of at least three interrelated Testing "
        "Activities conducted to facilitate the discovery of defects and/or the assessment of "
        "Characteristics and Attributes of a Testable Entity.",
    ),
    (
        "TestingActivity", "Testing Activity", (), "TestTDO", OWN, ("Activity",),
        "It is an Activity that is formed by an interrelated set of sub-activities and tasks, aimed at "
        "designing, realizing or analyzing the testing endeavor for a particular Testable Entity.",
    ),
    (
        "TestingAgent", "Testing Agent", (), "TestTDO", OWN, ("Agent",),
        "It is an Agent -i.e., a work resource- assigned to a Testing Activity in compliance with one "
        "or more Testing Roles.",
    ),
    (
        "TestingAutomatedAgent", "Testing Automated Agent", (), "TestTDO", OWN, ("TestingAgent",),
        "It is a Testing Agent, which is not a human being.",
    ),
    (
        "TestingDesignMethod", "Testing Design Method", (), "TestTDO", OWN, ("TestingMethod",),
        "It is a Testing Method for a task included in a Design Testing activity.",
    ),
    (
        "TestingHumanAgent", "Testing Human Agent", (), "TestTDO", OWN, ("TestingAgent",),
        "It is a Testing Agent, which is a human being.",
    ),
    (
        "TestingLifeCycle", "Testing Life Cycle", (), "TestTDO", OWN, (),
        "The series of phases that a Test Project passes through from its initiation to its closure.",
    ),
    (
        "TestingManagement", "Testing Management", (), "TestTDO", OWN, ("WorkProcess",),
        "It is the set of managerial processes and activities intended to achieve the Test Goal "
        "operationalized by a Test Project.",
    ),
    (
        "TestingMethod", "Testing Method", ("Testing Technique",), "TestTDO", OWN, ("Method",),
        "A specific and particular way to perform the specified steps for a task included in a Testing "
        "Activity.",
    ),
    (
        "TestingRealizationMethod", "Testing Realization Method", (), "TestTDO", OWN, ("TestingMethod",),
        "It is a Testing Method for a task included in a Testing Realization activity.",
    ),
    (
        "TestingRole", "Testing Role", (), "TestTDO", OWN, ("Role",),
        "It is a Role that implies a set of testing skills.",
    ),
    (
        "TestingStrategy", "Testing Strategy", (), "TestTDO", OWN, (),
        "Principles, patterns, and particular test domain concepts and framework that can be specified "
        "by a set of core Testing Processes, in addition to a set of appropriated Testing Methods and "
        "Tools, as core resources, for helping to achieve the Project's Test Goal purpose.",
    ),
    (
        "TestingTool", "Testing Tool", (), "TestTDO", OWN, ("Tool",),
        "It is a Tool that partially or totally accomplishes the automatic execution of a Testing Method.",
    ),
    # Completely reused terms (functional / non-functional requirements ontologies).
    (
        "FunctionalRequirement", "Functional Requirement", (), "FRsTDO", REUSED, (),
        "Completely reused term from the functional-requirements top-domain ontology.",
    ),
    (
        "NonFunctionalRequirement", "Non-Functional Requirement", (), "NFRsTDO", REUSED, (),
        "Completely reused term from the non-functional-requirements top-domain ontology.",
    ),
    (
        "DevelopableEntity", "Developable Entity", (), "FRsTDO", REUSED, (),
        "Completely reused term from the functional-requirements top-domain ontology.",
    ),
    (
        "EvaluableEntity", "Evaluable Entity", (), "NFRsTDO", REUSED, (),
        "Completely reused term from the non-functional-requirements top-domain ontology.",
    ),
    # Imported stubs: just enough of the upper layers to close the taxonomy
    # and type the axioms.  They carry no attributes and may be instantiated.
    ("WorkProduct", "Work Product", (), "ProcCO", STUB, (), "Imported stub from the process core layer."),
    ("Artifact", "Artifact", (), "ProcCO", STUB, ("WorkProduct",), "Imported stub from the process core layer."),
    ("Outcome", "Outcome", (), "ProcCO", STUB, ("WorkProduct",), "Imported stub from the process core layer."),
    ("WorkProcess", "Work Process", (), "ProcCO", STUB, (), "Imported stub from the process core layer."),
    ("Activity", "Activity", (), "ProcCO", STUB, (), "Imported stub from the process core layer."),
    ("Agent", "Agent", (), "ProcCO", STUB, (), "Imported stub from the process core layer."),
    ("Role", "Role", (), "ProcCO", STUB, (), "Imported stub from the process core layer."),
    ("Method", "Method", (), "ProcCO", STUB, (), "Imported stub from the process core layer."),
    ("Tool", "Tool", (), "ProcCO", STUB, (), "Imported stub from the process core layer."),
    ("Project", "Project", (), "ProjCO", STUB, (), "Imported stub from the project core layer."),
    ("Goal", "Goal", (), "GCO", STUB, (), "Imported stub from the goal core layer."),
    ("InformationNeedGoal", "Information Need Goal", (), "GCO", STUB, ("Goal",), "Imported stub from the goal core layer."),
    ("ContextEntity", "Context Entity", (), "SCO", STUB, (), "Imported stub from the situation core layer."),
    ("ParticularSituation", "Particular Situation", (), "SCO", STUB, (), "Imported stub from the situation core layer."),
    (
        "TestRequirementSpecification", "Test Requirement Specification", (), "ProcCO", STUB, ("Artifact",),
        "Imported stub: an Artifact that specifies a Test Requirement (consumable by a Testing work process).",
    ),
    (
        "TestParticularSituationSpecification", "Test Particular Situation Specification", (), "ProcCO", STUB,
        ("Artifact",),
        "Imported stub: an Artifact that models a Test Particular Situation (consumable by a Testing work process).",
    ),
)

# (owner, attr_name, definition): 51 rows, all on own terms.
ATTRIBUTE_ROWS: tuple[tuple[str, str, str], ...] = (
    ("ActualResult", "value", "Numerical or categorical result."),
    ("Incident", "version", "Unique identifier, which indicates the level of evolution of the Incident artifact."),
    ("RealizationProcedure", "specification", "A formal or semiformal representation of a Realization Procedure."),
    ("TestBasis", "name", "Label or name that identifies the Test Basis artifact."),
    ("TestBasis", "version", "Unique identifier, which indicates the level of evolution of the Test Basis artifact."),
    (
        "TestCase", "precondition",
        "Any kind of constraint that must evaluate to true before the Test Case's input be used in a "
        "Perform Testing activity.",
    ),
    (
        "TestCase", "input",
        "Test Case inputs are the data (numbers, categories, objects' instances, etc.) and/or events "
        "(e.g., button clicks) used to exercise a Testable Entity in a Perform Testing activity.",
    ),
    (
        "TestCase", "expected_result",
        "Value and/or behavior that is expected to get after a Testable Entity is exercised using the "
        "Test Case inputs.",
    ),
    (
        "TestCase", "postcondition",
        "Any kind of constraint that must evaluate to true after the Test Case's input was used and the "
        "Actual Result was yielded in a Perform Testing activity.",
    ),
    # The source table leaves this definition cell empty.
    ("TestChecklist", "item_description", ""),
    ("TestConclusionReport", "name", "Label or name that identifies the Test Conclusion Report."),
    (
        "TestConclusionReport", "version",
        "Unique identifier, which indicates the level of evolution of the Test Conclusion Report.",
    ),
    ("TestConclusionReport", "description", "An unambiguous textual statement describing the Test Conclusion Report."),
    ("TestContextEntity", "name", "Label or name that identifies the Test Context Entity."),
    ("TestContextEntity", "description", "An unambiguous textual statement describing the Test Context Entity."),
    ("TestGoal", "label", "Label that identifies a Test Goal uniquely."),
    ("TestGoal", "statement", "An explicit declaration of the aim to be achieved."),
    ("TestGoal", "purpose", "The rationale for achieving the specified Test Goal."),
    (
        "TestGoal", "success_criteria",
        "The set of conditions by which the Test Goal will be judged as successful for stakeholders.",
    ),
    ("TestInformationNeed", "label", "Label that identifies a Test Information Need uniquely."),
    ("TestInformationNeed", "statement", "An explicit declaration of the aim to be achieved."),
    (
        "TestInformationNeed", "purpose",
        "The rationale for achieving the specified Test Information Need goal, which basically consists "
        "on analyze to provide information.",
    ),
    (
        "TestParticularSituation", "positive_statement",
        "An explicit declaration of a Test Particular Situation to be defined, which can refer to a "
        "static or dynamic situation.",
    ),
    (
        "TestParticularSituation", "model_specification",
        "It represents an Artifact that specifies and models Test Particular Situations in a given language.",
    ),
    (
        "TestParticularSituation", "conditions",
        "Any kind of constraint that must be fulfilled in the Test Particular Situation.",
    ),
    ("TestProject", "name", "Label or name that identifies the Test Project."),
    ("TestRequirement", "label", "Label that identifies a Test Requirement uniquely."),
    ("TestRequirement", "statement", "An explicit declaration of the Test Requirement to be satisfied."),
    (
        "TestRequirement", "testable_entity_phase",
        "It indicates the stage of the testable-entity life cycle in which the Testable Entity is.",
    ),
    (
        "TestRequirement", "test_level",
        "It represents a kind of test that delimits the scope of the Testable Entity and its context "
        "taking into account the Test Requirement statement.",
    ),
    (
        "TestRequirement", "completion_criteria",
        "The set of conditions by which the Test Requirement will be judged as complete for stakeholders.",
    ),
    ("TestResult", "name", "Label or name that identifies the Test Result work product."),
    ("TestResult", "description", "An unambiguous textual statement describing the Test Result."),
    ("TestSpecification", "name", "Label or name that identifies the Test Specification artifact."),
    (
        "TestSpecification", "version",
        "Unique identifier, which indicates the level of evolution of the Test Specification artifact.",
    ),
    ("TestableEntity", "name", "Label or name that identifies the Testable Entity."),
    ("TestableEntity", "description", "An unambiguous textual statement describing the Testable Entity."),
    ("Testing", "name", "Label or name that identifies the Testing work process."),
    (
        "Testing", "work_description",
        "Specification of what to do for achieving the objective of a Testing Work Process.",
    ),
    ("TestingActivity", "name", "Label or name that identifies the Testing Activity."),
    (
        "TestingActivity", "work_description",
        "Specification of what to do for achieving the objective of a Testing Activity.",
    ),
    ("TestingAgent", "name", "Label or name that identifies the Testing Agent."),
    ("TestingAgent", "capabilities", "Set of abilities that the Testing Agent has."),
    (
        "TestingDesignMethod", "design_procedure",
        "Arranged set of Testing Design Method's instructions or operations, which specifies how must "
        "be performed the Design Testing activity using the Test Basis, if any.",
    ),
    ("TestingMethod", "name", "Label or name that identifies the Testing Method."),
    (
        "TestingMethod", "rule",
        "Set of principles, conditions, heuristics, axioms, etc. associated to the design procedure or "
        "Realization Procedure.",
    ),
    ("TestingRole", "name", "Label or name that identifies the Testing Role."),
    ("TestingRole", "skills", "Set of capabilities, competencies and responsibilities of a role."),
    ("TestingStrategy", "name", "Label or name that identifies the Testing Strategy."),
    ("TestingTool", "name", "Label or name that identifies the Testing Tool."),
    ("TestingTool", "description", "An unambiguous textual statement describing the Testing Tool."),
)

UNBOUNDED = None

# (rel_name, source, target, source_min, source_max, target_min, target_max, definition)
# target_* bounds come from the defining sentence; source_* lower bounds only
# from an explicit "In turn" inverse sentence (involves, plays,
# verifies_validates) and are otherwise unconstrained.
RELATIONSHIP_ROWS: tuple[tuple[str, str, str, int, int | None, int, int | None, str], ...] = (
    (
        "adopts", "TestingManagement", "TestingLifeCycle", 0, UNBOUNDED, 1, 1,
        "A Testing Management process adopts a Testing Life Cycle.",
    ),
    (
        "associates", "TestProject", "TestingStrategy", 0, UNBOUNDED, 1, UNBOUNDED,
        "A Test Project associates one or more Testing Strategies.",
    ),
    (
        "consumes", "AnalyzeTestResults", "TestResult", 0, UNBOUNDED, 1, UNBOUNDED,
        "An Analyze Test Results activity consumes one or more Test Result as work product.",
    ),
    (
        "consumes", "PerformTesting", "TestSpecification", 0, UNBOUNDED, 1, UNBOUNDED,
        "A Perform Testing activity consumes one or more Test Specification as artifact.",
    ),
    (
        "consumes", "AnalyzeTestResults", "TestSpecification", 0, UNBOUNDED, 1, UNBOUNDED,
        "An Analyze Test Results activity consumes one or more Test Specification as artifact.",
    ),
    (
        "consumes", "DesignTesting", "TestBasis", 0, UNBOUNDED, 0, UNBOUNDED,
        "A Design Testing activity consumes Test Basis, if any.",
    ),
    (
        "consumes", "Testing", "TestParticularSituationSpecification", 0, UNBOUNDED, 0, UNBOUNDED,
        "A Testing work process can consume one or more Test Particular Situation's model "
        "specifications as Artifacts.",
    ),
    (
        "consumes", "Testing", "TestRequirementSpecification", 0, UNBOUNDED, 0, UNBOUNDED,
        "A Testing work process can consume one or more Test Requirement's specifications as Artifacts.",
    ),
    (
        "deals_with_test_environment", "TestParticularSituation", "TestContextEntity", 0, UNBOUNDED, 0, UNBOUNDED,
        "A Test Particular Situation deals with none or many concrete Test Context Entities as a test "
        "environment.",
    ),
    (
        "deals_with_test_target", "TestParticularSituation", "TestableEntity", 0, UNBOUNDED, 1, UNBOUNDED,
        "A Test Particular Situation deals with one or more concrete Testable Entities as a test target.",
    ),
    (
        "defines", "TestProject", "TestParticularSituation", 0, UNBOUNDED, 1, UNBOUNDED,
        "A Test Project defines one or several Test Particular Situations.",
    ),
    (
        "helps_to_achieve", "TestingStrategy", "TestGoal", 0, UNBOUNDED, 1, UNBOUNDED,
        "A Testing Strategy gives support for achieving one or more Test Goals.",
    ),
    (
        "implies", "TestGoal", "TestParticularSituation", 0, UNBOUNDED, 1, UNBOUNDED,
        "A Test Goal implies one or more Test Particular Situations.",
    ),
    (
        "influences", "TestContextEntity", "TestableEntity", 0, UNBOUNDED, 1, UNBOUNDED,
        "A Test Context Entity influences one or several Testable Entities.",
    ),
    (
        "involves", "Testing", "TestingRole", 1, UNBOUNDED, 1, UNBOUNDED,
        "A Testing Work Process involves one or more Testing Roles. In turn, a Testing Role may "
        "participate in one or more Testing Work Process.",
    ),
    (
        "is_assigned_to", "StaticTestingMethod", "PerformStaticTesting", 0, UNBOUNDED, 1, UNBOUNDED,
        "A Static Testing Method is assigned to one or more Perform Static Testing activities.",
    ),
    (
        "is_assigned_to", "DynamicTestingMethod", "PerformDynamicTesting", 0, UNBOUNDED, 1, UNBOUNDED,
        "A Dynamic Testing Method is assigned to one or more Perform Dynamic Testing activities.",
    ),
    (
        "is_assigned_to", "TestingDesignMethod", "DesignTesting", 0, UNBOUNDED, 1, UNBOUNDED,
        "A Testing Design Method is assigned to one or more Design Testing activities.",
    ),
    (
        "is_assigned_to", "TestingAgent", "TestingActivity", 0, UNBOUNDED, 1, UNBOUNDED,
        "A Testing Agent is assigned to one or more Testing Activities.",
    ),
    (
        "is_based_on", "RealizationProcedure", "TestSpecification", 0, UNBOUNDED, 0, UNBOUNDED,
        "A Realization Procedure is based on none or several Test Specifications.",
    ),
    (
        "is_based_on", "TestRequirement", "TestBasis", 0, UNBOUNDED, 0, UNBOUNDED,
        "A Test Requirement is based on none or several Test Basis.",
    ),
    (
        "is_derived_in", "TestGoal", "TestRequirement", 0, UNBOUNDED, 1, UNBOUNDED,
        "A Test Goal is derived in one or more Test Requirements.",
    ),
    (
        "is_linked_to", "TestBasis", "NonFunctionalRequirement", 0, UNBOUNDED, 0, UNBOUNDED,
        "A Test Basis is linked to none or several Non-Functional Requirements.",
    ),
    (
        "is_linked_to", "TestBasis", "FunctionalRequirement", 0, UNBOUNDED, 0, UNBOUNDED,
        "A Test Basis is linked to none or several Functional Requirements.",
    ),
    (
        "is_managed_by", "TestProject", "TestingManagement", 0, UNBOUNDED, 1, 1,
        "A Test Project is managed by means of a Testing Management process.",
    ),
    (
        "is_supported_by", "TestGoal", "TestInformationNeed", 0, UNBOUNDED, 1, UNBOUNDED,
        "A Test Goal is supported by one or more Test Information Needs.",
    ),
    (
        "operationalizes", "TestProject", "TestGoal", 0, UNBOUNDED, 1, UNBOUNDED,
        "A Test Project operationalizes one or more Test Goals.",
    ),
    (
        "plays", "TestingAgent", "TestingRole", 1, UNBOUNDED, 1, UNBOUNDED,
        "A Testing Agent plays one or more Testing Roles. In turn, a Testing Role is played by one or "
        "more Testing Agents.",
    ),
    (
        "produces", "TestingManagement", "TestPlan", 0, UNBOUNDED, 1, 1,
        "A Testing Management process produces a Test Plan as artifact.",
    ),
    (
        "produces", "PerformTesting", "TestResult", 0, UNBOUNDED, 1, 1,
        "A Perform Testing activity produces a Test Result as work product.",
    ),
    (
        "produces", "AnalyzeTestResults", "TestConclusionReport", 0, UNBOUNDED, 1, 1,
        "An Analyze Test Results activity produces a Test Conclusion Report as artifact.",
    ),
    (
        "produces", "DesignTesting", "RealizationProcedure", 0, UNBOUNDED, 1, UNBOUNDED,
        "A Design Testing activity produces one or more Realization Procedure.",
    ),
    (
        "produces", "DesignTesting", "TestSpecification", 0, UNBOUNDED, 1, UNBOUNDED,
        "A Design Testing activity produces one or more Test Specification as artifact.",
    ),
    (
        "refers_to", "TestRequirement", "TestableEntity", 0, UNBOUNDED, 1, 1,
        "A Test Requirement in its statement always refers to a Testable Entity.",
    ),
    (
        "refers_to", "TestRequirement", "TestContextEntity", 0, UNBOUNDED, 0, UNBOUNDED,
        "A Test Requirement can refer to a one or more Test Context Entities.",
    ),
    (
        "relies_on", "Incident", "ActualResult", 0, UNBOUNDED, 0, UNBOUNDED,
        "An Incident detected in a Perform Testing activity relies on none or several Actual Results.",
    ),
    (
        "requires_as_input", "Testing", "TestableEntity", 0, UNBOUNDED, 1, 1,
        "A Testing process needs a Testable Entity as input.",
    ),
    (
        "requires_as_input", "Testing", "TestContextEntity", 0, UNBOUNDED, 0, UNBOUNDED,
        "A Testing process needs none or many Test Context Entities as input.",
    ),
    (
        "surrounded_by", "TestableEntity", "TestContextEntity", 0, UNBOUNDED, 1, UNBOUNDED,
        "A Testable Entity is surrounded by one or several Test Context Entities.",
    ),
    (
        "takes_into_account", "AnalyzeTestResults", "TestInformationNeed", 0, UNBOUNDED, 1, UNBOUNDED,
        "An Analyze Test Results activity consumes one or more Test Information Needs as a specification.",
    ),
    (
        "uses", "TestingLifeCycle", "TestingStrategy", 0, UNBOUNDED, 1, UNBOUNDED,
        "A Testing Life Cycle uses one or more Testing Strategies.",
    ),
    (
        "uses", "TestingAgent", "TestingTool", 0, UNBOUNDED, 0, UNBOUNDED,
        "A Testing Agent uses Testing Tools, if any.",
    ),
    (
        "verifies_validates", "TestSpecification", "TestableEntity", 1, UNBOUNDED, 1, UNBOUNDED,
        "A Test Specification verifies/validates one or more Testable Entities. In turn, a Testable "
        "Entity is verified/validated by one or more Test Specifications.",
    ),
)

# Untyped builtin relations: part-whole composition (axiom bodies) and the
# stub-artifact-to-subject link.  Exempt from name/endpoint/cardinality checks.
BUILTIN_RELATIONS: frozenset[str] = frozenset({"part_of", "specifies"})

# Link signatures sanctioned by axiom consequents but absent from the
# relationship table: the axioms demand e.g. involves(activity, role) while
# the table only defines involves(process, role).  These extend endpoint-type
# acceptance (E011) only; they carry no cardinality bounds and do not count
# toward the 43 relationship rows.
AXIOM_LINK_EXTENSIONS: frozenset[tuple[str, str, str]] = frozenset(
    {
        ("consumes", "TestingActivity", "TestRequirementSpecification"),
        ("consumes", "TestingActivity", "TestParticularSituationSpecification"),
        ("involves", "TestingActivity", "TestingRole"),
        ("requires_as_input", "TestingActivity", "TestableEntity"),
        ("requires_as_input", "TestingActivity", "TestContextEntity"),
    }
)
