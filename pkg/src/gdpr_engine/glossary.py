"""Glossary lookup data for the conceptual model.

Term definitions for the model's classes, enumeration literals, and general
regulation vocabulary. Lookup is a case-insensitive exact match on the term.
"""

from __future__ import annotations

GLOSSARY: dict[str, str] = {
    # Core vocabulary.
    "Personal Data": (
        "Personal data means any information relating to an identified or "
        "identifiable natural person."
    ),
    "Data Processing": (
        "Is any operation performed on personal data, whether or not by "
        "automated means, including collection, recording, organization, "
        "structuring, storage, etc."
    ),
    "Data Subject": (
        "A natural person whose personal data is processed by a controller "
        "or processor."
    ),
    "Consent": (
        "It means any freely given, specific, informed and unambiguous "
        "indication of the data subject's wishes by which he or she, by a "
        "statement or by a clear affirmative action, signifies agreement to "
        "the processing of personal data relating to him or her."
    ),
    "Purpose": (
        "The purpose of data processing is said to be lawful if its legal "
        "basis matches one of the possible circumstances under which GDPR "
        "permits the processing of personal data. Example of valid legal "
        "basis for data processing are consent and when processing is "
        "necessary to perform or prepare for a contract with the data "
        "subject."
    ),
    "Union Law": "Regulation (i.e. laws) of the European Union.",
    "Directive": (
        "A legislative act that sets out a goal that all EU countries must "
        "achieve through their own national laws."
    ),
    "Controller": (
        "A natural or legal person, public authority, agency or any other "
        "body which, alone or jointly with others, determines the purposes "
        "and means of the processing of personal data where the purposes "
        "and means of such processing are determined by national or EU laws "
        "or regulations, the controller or the specific criteria for its "
        "nomination may be provided by national or EU law."
    ),
    "Processor": (
        "A natural or legal person, public authority, agency or other body "
        "which processes personal data on behalf of the controller. "
        "Moreover, data processors need to assist controllers in various "
        "circumstances where relevant, for example in a potential personal "
        "data breach notification or in considering a Data Protection "
        "Impact Assessment."
    ),
    "Processing": (
        "Any operation performed on personal data, whether or not by "
        "automated means, including collection, recording, organization, "
        "structuring, storage, adaptation or alteration, retrieval, "
        "consultation, use, disclosure by transmission, dissemination or "
        "otherwise making available, alignment or combination, restriction, "
        "erasure or destruction."
    ),
    "Identifiable Natural Person": (
        "An identifiable natural person is one who can be identified, "
        "directly or indirectly, in particular by reference to an "
        "identifier such as a name, an identification number, location "
        "data, an online identifier or to one or more factors specific to "
        "the physical, physiological, genetic, mental, economic, cultural "
        "or social identity of that natural person."
    ),
    "Restriction of Processing": (
        "It means the marking of stored personal data with the aim of "
        "limiting their processing in the future."
    ),
    "Profiling": (
        "It means to analyze or predict aspects concerning that natural "
        "person's performance at work, economic situation, health, personal "
        "preferences, interests, reliability, behavior, location or "
        "movements."
    ),
    "Pseudonymisation": (
        "It means the processing of personal data in such a manner that the "
        "personal data can no longer be attributed to a specific data "
        "subject without the use of additional information, provided that "
        "such additional information is kept separately and is subject to "
        "technical and organizational measures to ensure that the personal "
        "data are not attributed to an identified or identifiable natural "
        "person."
    ),
    "Filing System": (
        "It means any structured set of personal data which are accessible "
        "according to specific criteria, whether centralized, decentralized "
        "or dispersed on a functional or geographical basis."
    ),
    "Recipient": (
        "It means that a natural or legal person, public authority, agency "
        "or another body, to which the personal data are disclosed, whether "
        "a third party or not. However, public authorities which may "
        "receive personal data in the framework of a particular inquiry in "
        "accordance with Union or Member State law shall not be regarded as "
        "recipients."
    ),
    "Third Party": (
        "It means a natural or legal person, public authority, agency or "
        "body other than the data subject, controller, processor and "
        "persons who, under the direct authority of the controller or "
        "processor, are authorized to process personal data."
    ),
    "Personal Data Breach": (
        "It means a breach of security leading to the accidental or "
        "unlawful destruction, loss, alteration, unauthorized disclosure "
        "of, or access to, personal data transmitted, stored or otherwise "
        "processed."
    ),
    "Biometric Data": (
        "It means personal data resulting from specific technical "
        "processing relating to the physical, physiological or behavioral "
        "characteristics of a natural person, which allow or confirm the "
        "unique identification of that natural person, such as facial "
        "images or dactyloscopic data."
    ),
    "Data Concerning Health": (
        "It means personal data related to the physical or mental health of "
        "a natural person, including the provision of health care services, "
        "which reveal information about his or her health status."
    ),
    "Representative": (
        "It means a natural or legal person established in the Union who, "
        "designated by the controller or processor."
    ),
    "Enterprise": (
        "It means a natural or legal person engaged in an economic "
        "activity, irrespective of its legal form, including partnerships "
        "or associations regularly engaged in an economic activity."
    ),
    "Group of Undertakings": (
        "It means a controlling undertaking and its controlled undertakings."
    ),
    "Supervisory Authority": (
        "It means an independent public authority which is established by a "
        "Member State."
    ),
    "Relevant and Reasoned Objection": (
        "It means an objection to a draft decision as to whether there is "
        "an infringement of this Regulation, or whether envisaged action in "
        "relation to the controller or processor complies with this "
        "Regulation, which clearly demonstrates the significance of the "
        "risks posed by the draft decision as regards the fundamental "
        "rights and freedoms of data subjects and, where applicable, the "
        "free flow of personal data within the Union."
    ),
    "International Organization": (
        "It means an organization and its subordinate bodies governed by "
        "public international law, or any other body which is set up by, or "
        "on the basis of, an agreement between two or more countries."
    ),
    "Member State Law": (
        "Specific regulation (i.e. laws) from a European member state."
    ),
    "Processing Personal Data Collected for Different Purpose": (
        "Where the processing for a purpose other than that for which the "
        "personal data have been collected is not based on the data "
        "subject's consent or on a Union or Member State law."
    ),
    "Encryption": (
        "Personal data that is protected through technological measures to "
        "ensure that the data is only accessible/readable by those with "
        "specified access."
    ),
    "Child": (
        "Any identifiable natural person that is below of 16 years."
    ),
    "Special Categories of Personal Data": (
        "Special categories of personal data include: racial or ethnic "
        "origin, political opinions, religious or philosophical beliefs, or "
        "trade union membership, genetic data, biometric data for the "
        "purpose of uniquely identifying a natural person, data concerning "
        "health or data concerning a natural person's sex life or sexual "
        "orientation shall be prohibited."
    ),
    "Criminal Convictions and Offenses Data": (
        "Criminal convictions and offenses data represent personal data "
        "relating to criminal convictions and offenses or related security "
        "measures."
    ),
    "Transparent Information": (
        "It means processing to the data subject in a concise, transparent, "
        "intelligible and easily accessible form, using clear and plain "
        "language, in particular for any information addressed specifically "
        "to a child."
    ),
    "Right to Rectification": (
        "The data subject shall have the right to obtain from the "
        "controller without undue delay the rectification of inaccurate "
        "personal data concerning him or her."
    ),
    "Right to Be Forgotten": (
        "Also known as Data Erasure, it entitles the data subject to have "
        "the data controller erase his/her personal data, cease further "
        "dissemination of the data, and potentially have third parties "
        "cease processing of the data."
    ),
    "Right to Restriction": (
        "The data subject shall have the right to obtain from the "
        "controller restriction of processing the data."
    ),
    "Right to Data Portability": (
        "The data subject shall have the right to receive the personal data "
        "concerning him or her, which he or she has provided to a "
        "controller, in a structured, commonly used and machine-readable "
        "format and have the right to transmit those data to another "
        "controller without hindrance from the controller to which the "
        "personal data have been provided."
    ),
    "Right to Object": (
        "The data subject shall have the right to object, on grounds "
        "relating to his or her particular situation, at any time to "
        "processing of personal data concerning him or her."
    ),
    "Right Not to Be Subject to a Decision": (
        "The data subject shall have the right not to be subject to a "
        "decision based solely on automated processing, including "
        "profiling, which produces legal effects concerning him or her or "
        "similarly significantly affects him or her."
    ),
    "Data Protection by Design": (
        "A principle that calls for the inclusion of data protection from "
        "the onset of the designing of systems, rather than an addition."
    ),
    "Joint Controllers": (
        "Joint controllers shall in a transparent manner determine their "
        "respective responsibilities for compliance with the obligations "
        "under the GDPR regulation."
    ),
    "Data Protection Impact Assessment": (
        "A tool used to identify and reduce the privacy risks of entities "
        "by analyzing the personal data that are processed and the policies "
        "in place to protect the data."
    ),
    "Legislative Measures": (
        "They are laws, treaties and regulations on the protection of "
        "traditional knowledge and traditional cultural expressions, and "
        "legislative texts relevant to personal data."
    ),
    "Data Protection Officer": (
        "A data protection officer (DPO) is an enterprise security "
        "leadership role required by the General Data Protection Regulation "
        "(GDPR). Data protection officers are responsible for overseeing "
        "data protection strategy and implementation to ensure compliance "
        "with GDPR requirements."
    ),
    "Right to Access": (
        "Also known as Subject Access Right, it entitles the data subject "
        "to have access to and information about the personal data that a "
        "controller has concerning them."
    ),
    "Code of Conduct": (
        "It is intended to contribute to the proper application of the "
        "GDPR taking account of the specific features of the various "
        "processing sectors and the specific needs of micro, small and "
        "medium-sized enterprises."
    ),
    "Data Protection Certification": (
        "It is meant to demonstrate compliance with the GDPR of processing "
        "operations by controllers and processors."
    ),
    "Infringement": (
        "It is meant to the action of breaking the terms of the GDPR "
        "regulation."
    ),
    "Cross-Border Data Transfer": (
        "The GDPR permits personal data transfers to a third country or "
        "international organization subject to compliance with set "
        "conditions, including conditions for onward transfer."
    ),
    "Standard Contractual Clauses": (
        "They are a common, standardized method for transferring personal "
        "data to controllers and processors located in non-adequate "
        "countries outside of the EEA. These act as a contract between two "
        "legal entities and they do not require a license."
    ),
    "Binding Corporate Rules": (
        "They are internal rules which define the international policy in a "
        "multinational group of companies and international organizations "
        "regarding intra-organizational personal data cross-border "
        "transfers."
    ),
    "Genetic Data": (
        "It means personal data relating to the inherited or acquired "
        "genetic characteristics of a natural person which give unique "
        "information about the physiology or the health of that natural "
        "person and which result, in particular, from an analysis of a "
        "biological sample from the natural person in question."
    ),
    "Adequacy Decision": (
        "An adequacy decision is a decision taken by the European "
        "Commission establishing that a third country provides a comparable "
        "level of protection of personal data to that in the European "
        "Union, through its domestic law or its international commitments."
    ),
    "Data Controller": (
        "A natural or legal person, public authority, agency or any other "
        "body which, alone or jointly with others, determines the purposes "
        "and means of the processing of personal data."
    ),
    "Cross-Border Processing": (
        "This type of processing often involves a unique multi-international "
        "controller/processor. Cross-border processing might take place in "
        "more than one Member State where the controller or processor is "
        "established. Cross-border processing might take place in the "
        "context of the activities of a single establishment of a "
        "controller or processor in the Union, but which substantially "
        "affects or is likely to substantially affect data subjects in more "
        "than one EU State."
    ),
    "Delegated Acts": (
        "Non-legislative acts enacted in order to supplement existing "
        "legislation and provide criteria or clarity."
    ),
    "Country Code": (
        "Lists the abbreviation codes for countries. The ISO Country Codes "
        "standard is used for the literals, e.g., LU denotes Luxembourg."
    ),
}

# Selected enumeration-literal vocabulary, keyed by the literal's display
# name. Only literals whose meaning is not obvious from the identifier are
# carried here.
GLOSSARY.update({
    "Natural Person": "A natural person is a person that is an individual human being.",
    "Legal Person": (
        "A legal person is any individual, company, or other entity which "
        "has legal rights and is subject to privileges and obligation such "
        "as having the ability to enter into contracts, to sue, and to be "
        "sued."
    ),
    "Official": "Any establishment recognized as an Authority entity or a public body.",
    "Information Society Service": (
        "An information society service is any society/person that provides "
        "service provided, via electronic means upon an individual request "
        "from a user."
    ),
    "Access Control": (
        "Policy to limit access to personal data for an authorized employee "
        "to ensure that employees have access only to information or "
        "systems applicable to their job."
    ),
    "Pseudonymization": (
        "The activity of processing personal data in such a manner that the "
        "personal data can no longer be attributed to a specific data "
        "subject without the use of additional information, provided that "
        "such additional information is kept separately and is subject to "
        "technical and organizational measures to ensure that the personal "
        "data are not attributed to an identified or identifiable natural "
        "person."
    ),
    "Supported by Consent": (
        "The DS has explicitly consented to the proposed transfer, after "
        "having been informed of the possible risks of such transfers for "
        "the data subject due to the absence of an adequacy decision and "
        "appropriate safeguards."
    ),
    "Vital Interests": "It is necessary to protect life and death of individuals.",
    "Judicial": "Data relating to criminal convictions and offenses.",
})


def glossary_lookup(term: str) -> str | None:
    """Definition for ``term`` (case-insensitive exact match), or None."""
    if not isinstance(term, str) or not term:
        return None
    folded = term.strip().casefold()
    for key, definition in GLOSSARY.items():
        if key.casefold() == folded:
            return definition
    return None
